"""Domain errors raised by holocodes.

Every error carries a machine readable ``code`` which is what the command
line reports in its JSON output.
"""


class HolocodesError(Exception):
    """Base class for every domain error."""

    code = 'HolocodesError'


# Finite fields

class NonPrimeP(HolocodesError):
    """Indicate that the characteristic is not a prime number."""

    code = 'NonPrimeP'


class ReducibleModulus(HolocodesError):
    """Indicate that a modulus is not a monic irreducible polynomial."""

    code = 'ReducibleModulus'


class FieldTooLarge(HolocodesError):
    """Indicate that q exceeds the configured field size bound."""

    code = 'FieldTooLarge'


class DivisionByZero(HolocodesError):
    """Indicate a division by the zero element."""

    code = 'DivisionByZero'


class FieldMismatch(HolocodesError):
    """Indicate that operands live in different fields."""

    code = 'FieldMismatch'


class OddExtensionDegree(HolocodesError):
    """Indicate that a field has no index 2 subfield."""

    code = 'OddExtensionDegree'


# Linear codes

class DuplicatePoints(HolocodesError):
    """Indicate repeated evaluation points."""

    code = 'DuplicatePoints'


class DegreeTooLarge(HolocodesError):
    """Indicate a degree bound larger than the number of points."""

    code = 'DegreeTooLarge'


class ZeroWeight(HolocodesError):
    """Indicate a zero column multiplier."""

    code = 'ZeroWeight'


class NoWeightRoot(HolocodesError):
    """Indicate that a weight target has no (q+1)-th root."""

    code = 'NoWeightRoot'


class SearchBoundExceeded(HolocodesError):
    """Indicate that an exhaustive search would exceed its bound."""

    code = 'SearchBoundExceeded'


class LengthMismatch(HolocodesError):
    """Indicate vectors or codes of incompatible lengths."""

    code = 'LengthMismatch'


# Stabilizer codes

class NotSelfOrthogonal(HolocodesError):
    """Indicate a code that is not symplectically self-orthogonal."""

    code = 'NotSelfOrthogonal'


class NotNested(HolocodesError):
    """Indicate a pair of codes where the first is not inside the second."""

    code = 'NotNested'


class NotHermitianSelfOrthogonal(HolocodesError):
    """Indicate a code that is not contained in its Hermitian dual."""

    code = 'NotHermitianSelfOrthogonal'


class OracleBoundExceeded(HolocodesError):
    """Indicate a Hilbert space too large for explicit matrices."""

    code = 'OracleBoundExceeded'


# Trees and graphs

class DepthBoundExceeded(HolocodesError):
    """Indicate a depth above the configured bound."""

    code = 'DepthBoundExceeded'


class InputShapeMismatch(HolocodesError):
    """Indicate an input vector of the wrong size."""

    code = 'InputShapeMismatch'


class KOutOfRange(HolocodesError):
    """Indicate a degree bound outside ``1 <= k <= q``."""

    code = 'KOutOfRange'


class InvalidGluing(HolocodesError):
    """Indicate malformed or repeated gluing points."""

    code = 'InvalidGluing'


class KTooSmall(HolocodesError):
    """Indicate that k is too small for the genus of the graph."""

    code = 'KTooSmall'


# Surfaces

class NotOrthogonal(HolocodesError):
    """Indicate incidence matrices that are not orthogonal."""

    code = 'NotOrthogonal'


class NonDivisor(HolocodesError):
    """Indicate a branching order that does not divide the modulus."""

    code = 'NonDivisor'


class NotHyperbolic(HolocodesError):
    """Indicate a triangle group that is not of hyperbolic type."""

    code = 'NotHyperbolic'


# Buildings

class DegreeOutOfRange(HolocodesError):
    """Indicate a section degree outside ``0 < m <= q``."""

    code = 'DegreeOutOfRange'


class SameLine(HolocodesError):
    """Indicate two line outputs on the same line."""

    code = 'SameLine'


class InconsistentConstraints(HolocodesError):
    """Indicate that no section matches the known values."""

    code = 'InconsistentConstraints'


# Input

class MalformedInput(HolocodesError):
    """Indicate JSON input that does not describe the expected object."""

    code = 'MalformedInput'
