"""Exception hierarchy.

Input-side problems derive from :class:`InputError` (also a ``ValueError``);
the CLI maps them to exit status 2.  :class:`ConsistencyFailure` signals a
result that contradicts a proven identity, i.e. a bug, and maps to exit 1.
"""


class WpsLabError(Exception):
    pass


class InputError(WpsLabError, ValueError):
    pass


class ConsistencyFailure(WpsLabError):
    pass


class DegenerateSystem(InputError):
    pass


class NotCoprime(InputError):
    pass


class IllFormedWeights(InputError):
    pass


class NotIntegral(InputError):
    pass


class ZeroSelfIntersection(InputError):
    pass


class NonIntegerResult(InputError):
    pass


class RequiresWstarOne(InputError):
    pass


class NonIntegralGenus(InputError):
    pass


class SpecialAdjunctionCase(InputError):
    """n = 4 with gcd(w1, w3) > 1 or gcd(w2, w4) > 1: the ambient singular
    locus is a curve lying on the surface and plain adjunction does not apply."""


class NotContractible(InputError):
    pass


class MissingC1(InputError):
    pass
