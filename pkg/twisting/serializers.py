"""
JSON form of twist elements.

Factors, words and atoms are nested dicts; every rational or field value
is a string so that dump -> load -> dump is bit-exact.
"""

from fractions import Fraction

from rest_framework import serializers

from core.exceptions import RMatrixError, TwistFormatError
from field.elements import Field, VarTable
from qgroup.cartan import CartanVector
from qgroup.words import Lower, QCommutator, QPower, Raise, Word
from .factors import CartanExp, QExpFactor, TwistElement


def _vector(values):
    if not isinstance(values, list):
        raise TwistFormatError(f'Cartan vector must be a list, got {values!r}')
    return CartanVector.from_strings(values)


def word_to_data(word, field):
    return {
        'coefficient': None if word.coefficient is None else field.canonical_string(word.coefficient),
        'atoms': [atom_to_data(atom, field) for atom in word.atoms],
    }


def atom_to_data(atom, field):
    if isinstance(atom, Raise):
        return {'raise': atom.index}
    if isinstance(atom, Lower):
        return {'lower': atom.index}
    if isinstance(atom, QPower):
        return {'q_power': atom.exponent.to_strings()}
    return {
        'commutator': {
            'left': word_to_data(atom.left, field),
            'right': word_to_data(atom.right, field),
            'q_exp': atom.q_exp,
        }
    }


def word_from_data(data, field):
    try:
        coefficient = data['coefficient']
        atoms = tuple(atom_from_data(atom, field) for atom in data['atoms'])
    except (KeyError, TypeError) as exc:
        raise TwistFormatError(f'Malformed word {data!r}: {exc}')
    return Word(None if coefficient is None else field.parse(coefficient), atoms)


def atom_from_data(data, field):
    if not isinstance(data, dict) or len(data) != 1:
        raise TwistFormatError(f'An atom has exactly one key, got {data!r}')
    (kind, value), = data.items()
    if kind == 'raise':
        return Raise(int(value))
    if kind == 'lower':
        return Lower(int(value))
    if kind == 'q_power':
        return QPower(_vector(value))
    if kind == 'commutator':
        return QCommutator(
            word_from_data(value['left'], field),
            word_from_data(value['right'], field),
            int(value['q_exp']),
        )
    raise TwistFormatError(f'Unknown atom kind "{kind}"')


def factor_to_data(factor, field):
    if isinstance(factor, CartanExp):
        return {
            'kind': 'cartan_exp',
            'q_terms': [
                [str(c), d.to_strings(), d_prime.to_strings()]
                for c, d, d_prime in factor.q_terms
            ],
            'parameter_terms': [
                [name, k, d.to_strings(), d_prime.to_strings()]
                for name, k, d, d_prime in factor.parameter_terms
            ],
        }
    return {
        'kind': 'q_exp',
        'coefficient': field.canonical_string(factor.coefficient),
        'base_exp': factor.base_exp,
        'left': word_to_data(factor.left, field),
        'right': word_to_data(factor.right, field),
    }


def factor_from_data(data, field):
    kind = data.get('kind')
    if kind == 'cartan_exp':
        return CartanExp(
            tuple((Fraction(c), _vector(d), _vector(d_prime)) for c, d, d_prime in data['q_terms']),
            tuple((name, int(k), _vector(d), _vector(d_prime)) for name, k, d, d_prime in data['parameter_terms']),
        )
    if kind == 'q_exp':
        return QExpFactor(
            field.parse(data['coefficient']),
            word_from_data(data['left'], field),
            word_from_data(data['right'], field),
            int(data['base_exp']),
        )
    raise TwistFormatError(f'Unknown factor kind "{kind}"')


class TwistElementSerializer(serializers.Serializer):
    """
    Serializer for twist elements.
    """
    n = serializers.IntegerField(min_value=1)
    label = serializers.CharField()
    variables = serializers.ListField(child=serializers.CharField())
    assignment = serializers.DictField(child=serializers.CharField(), allow_null=True, required=False)
    factors = serializers.ListField(child=serializers.DictField())

    def to_representation(self, instance):
        field = instance.field
        return {
            'n': instance.n,
            'label': instance.label,
            'variables': list(field.table.names),
            'assignment': field.assignment_strings(),
            'factors': [factor_to_data(factor, field) for factor in instance.factors],
        }

    def create(self, validated_data):
        try:
            field = Field(VarTable(tuple(validated_data['variables'])), validated_data.get('assignment'))
            factors = tuple(factor_from_data(data, field) for data in validated_data['factors'])
        except (KeyError, TypeError, ValueError) as exc:
            raise serializers.ValidationError({'factors': f'Malformed factor: {exc}'})
        except RMatrixError as exc:
            raise serializers.ValidationError({'factors': exc.message})
        return TwistElement(validated_data['n'], field, factors, validated_data['label'])
