"""
q-integers and q-factorials.
"""

from core.exceptions import AssignmentError, DegenerateQNumberError


def q_int(n, base, field):
    """
    [n; base] = (base**n - 1)/(base - 1), computed as 1 + base + ... + base**(n-1).
    """
    if n < 0:
        raise AssignmentError(f'q-integer index must be non-negative, got {n}')
    if base == field.one:
        raise DegenerateQNumberError()
    total = field.zero
    power = field.one
    for _ in range(n):
        total = total + power
        power = power * base
    return total


def q_factorial(n, base, field):
    """
    [n; base]! = [1; base][2; base]...[n; base], with [0; base]! = 1.
    """
    result = field.one
    for k in range(1, n + 1):
        result = result * q_int(k, base, field)
    return result
