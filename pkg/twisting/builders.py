"""
Builders for the three twist stages on U_q(gl(2N+1)).

    F1  Cartan twist making e_N, f_{N+1} twisted-primitive
    F2  q-exponentials pairing the Borel of the upper sl(N+1) with the
        primed lower generators, closed by a Cartan factor
    F3  Cartan factor carrying the free parameters a_ik and b_i
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from core.exceptions import IncompatibleTwistError
from field.elements import Field
from qgroup.cartan import CartanVector
from qgroup.roots import RootDatum
from qgroup.words import e, f, q_commutator, q_power, root_g
from .factors import CartanExp, QExpFactor, TwistElement, compose

logger = logging.getLogger('esoteric_rmatrix.twisting')

HALF = Fraction(1, 2)
STAGES = (1, 2, 3)


@dataclass(frozen=True)
class TwistParams:
    """
    Parameters mu_k, a_ik and b_i of the rank-N twist, read from ``field``.
    """
    rank: int
    field: Field

    @classmethod
    def symbolic(cls, rank):
        """
        Parameters as generators of the symbolic field of ``rank``.
        """
        return cls(rank, Field.symbolic(rank))

    @property
    def n(self):
        """gl(n) dimension, n = 2N+1."""
        return 2 * self.rank + 1

    def mu(self, k):
        return self.field.gen(f'mu{k}')

    def mu_root(self, root):
        i, j = root
        return reduce(lambda acc, k: acc * self.mu(k), range(i, j), self.field.one)

    def a(self, i, k):
        return self.field.gen(f'a{i}_{k}')

    def b(self, i):
        return self.field.gen(f'b{i}')

    @property
    def parameter_count(self):
        return (self.rank + 1) * (self.rank + 2) // 2

    @property
    def variable_names(self):
        return self.field.table.names


def build_F1(rank, field):
    """
    F1 = q^{1/2 (H_{N+1} (x) Z_{N+1} - Z_{N+1} (x) H_{N+1})}.
    """
    n = 2 * rank + 1
    top = CartanVector.top(n, rank + 1)
    bottom = CartanVector.bottom(n, rank + 1)
    element = CartanExp(((HALF, top, bottom), (-HALF, bottom, top)))
    return TwistElement(n, field, (element,), 'F1')


def build_F1_gl3(field):
    """
    F1 for N=1 written as q^{1/2 sum_{a<b} (E_aa (x) E_bb - E_bb (x) E_aa)}.
    """
    terms = []
    for a in range(1, 4):
        for b in range(a + 1, 4):
            unit_a, unit_b = CartanVector.unit(3, a), CartanVector.unit(3, b)
            terms += [(HALF, unit_a, unit_b), (-HALF, unit_b, unit_a)]
    return TwistElement(3, field, (CartanExp(tuple(terms)),), 'F1')


def twisted_raise(rank):
    """e~_N = e_N q^{H_{N+1}/2}."""
    return e(rank) * q_power(CartanVector.top(2 * rank + 1, rank + 1) * HALF)


def twisted_lower(rank):
    """f~_{N+1} = f_{N+1} q^{Z_{N+1}/2}."""
    return f(rank + 1) * q_power(CartanVector.bottom(2 * rank + 1, rank + 1) * HALF)


def psi_raise(rank, k):
    """
    Image of the sl(N+1) raising generator e_k, twisted at k = N.
    """
    return twisted_raise(rank) if k == rank else e(k)


def phi_lower(rank, k):
    """
    Lowering generator paired with e_k: f_{2N+1-k}, twisted at k = N.
    """
    return twisted_lower(rank) if k == rank else f(2 * rank + 1 - k)


def hat_e(params, root):
    """
    psi-image of the sl(N+1) root vector, normalized by (q^-1 - q)^{1 - height}.
    """
    if RootDatum.is_simple(root):
        return psi_raise(params.rank, root[0])
    field = params.field
    alpha, beta = RootDatum.split(root)
    normalizer = field.inverse(field.inverse(field.q) - field.q)
    return q_commutator(hat_e(params, alpha), hat_e(params, beta), 1, coefficient=normalizer)


def g_prime(params, datum, root):
    """
    Lowering root vector g of the primed root, built from phi_lower.
    """
    return root_g(datum, root, lower=lambda k: phi_lower(params.rank, k))


def build_F2(params, root_order=None):
    """
    prod exp_{q^2}(mu_alpha e^_alpha (x) g_{alpha'}) over the sl(N+1) roots,
    then q^{t0 + H_N (x) Z_N}.

    ``root_order`` overrides the ascending order of the q-exponentials.
    """
    rank, field, n = params.rank, params.field, params.n
    datum = RootDatum(rank)
    roots = datum.ascending_order(rank + 1) if root_order is None else list(root_order)
    factors = [
        QExpFactor(params.mu_root(root), hat_e(params, root), g_prime(params, datum, root), 2)
        for root in roots
    ]
    cartan_terms = [
        (1, CartanVector.unit(n, i), CartanVector.unit(n, datum.prime_index(i)))
        for i in range(1, rank + 1)
    ]
    cartan_terms.append((1, CartanVector.top(n, rank), CartanVector.bottom(n, rank)))
    factors.append(CartanExp(tuple(cartan_terms)))
    return TwistElement(n, field, tuple(factors), 'F2')


def build_F3(params):
    """
    prod_{i<k} a_ik^{X_i ^ X_k} prod_i b_i^{X_i ^ C} with X_i = E_ii - E_i'i'.
    """
    n, rank = params.n, params.rank
    central = CartanVector.central(n)
    differences = {i: CartanVector.priming_difference(n, i) for i in range(1, rank + 1)}
    terms = []
    for i in range(1, rank + 1):
        for k in range(i + 1, rank + 1):
            name = f'a{i}_{k}'
            terms += [(name, 1, differences[i], differences[k]), (name, -1, differences[k], differences[i])]
    for i in range(1, rank + 1):
        terms += [(f'b{i}', 1, differences[i], central), (f'b{i}', -1, central, differences[i])]
    return TwistElement(n, params.field, (CartanExp((), tuple(terms)),), 'F3')


def build_twist(params, stages=STAGES):
    """
    F3 F2 F1 restricted to ``stages``, highest stage leftmost.
    """
    stages = sorted(set(stages), reverse=True)
    if not stages or any(stage not in STAGES for stage in stages):
        raise IncompatibleTwistError(f'Twist stages must be drawn from {STAGES}, got {stages}')
    builders = {
        1: lambda: build_F1(params.rank, params.field),
        2: lambda: build_F2(params),
        3: lambda: build_F3(params),
    }
    element = compose(*(builders[stage]() for stage in stages))
    logger.debug('Built twist %s for N=%d over %r', element.label, params.rank, params.field)
    return element
