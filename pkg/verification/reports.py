"""
Check reports.
"""

from dataclasses import dataclass, replace

SYMBOLIC = 'symbolic'
NUMERIC = 'numeric-rational'
MODES = (SYMBOLIC, NUMERIC)


@dataclass(frozen=True)
class CheckReport:
    check: str
    passed: bool
    mode: str
    witness: dict = None
    rank: int = None
    millis: int = 0
    assignments: list = None
    details: dict = None

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError(f'Report for {self.check}: a witness is present exactly when the check fails')

    def with_context(self, **changes):
        return replace(self, **changes)

    def to_dict(self):
        return {
            'check': self.check,
            'N': self.rank,
            'mode': self.mode,
            'pass': self.passed,
            'witness': self.witness,
            'millis': self.millis,
            'assignments': self.assignments,
            'details': self.details,
        }


def entry_witness(field, row, col, lhs, rhs):
    """
    Witness for a mismatch at 0-based (row, col).
    """
    return {
        'row': row + 1,
        'col': col + 1,
        'lhs': field.canonical_string(lhs),
        'rhs': field.canonical_string(rhs),
    }


def merge_reports(check, reports, labels):
    """
    Combine sub-reports of one check; the first failing part supplies the witness.
    """
    witness = next((report.witness for report in reports if not report.passed), None)
    details = {label: report.passed for label, report in zip(labels, reports)}
    return CheckReport(
        check=check,
        passed=witness is None,
        mode=reports[0].mode,
        witness=witness,
        millis=sum(report.millis for report in reports),
        details=details,
    )
