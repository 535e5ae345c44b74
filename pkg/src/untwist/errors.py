"""Exception hierarchy.

Every domain error derives from :class:`UntwistError`; the CLI maps those to
exit status 1.
"""


class UntwistError(Exception):
    pass


class OddDimension(UntwistError):
    pass


class NonUnimodularIntersection(UntwistError):
    pass


class DimensionMismatch(UntwistError):
    pass


class NotUnimodular(UntwistError):
    pass


class NotSymplectic(UntwistError):
    pass


class NonPrimeModulus(UntwistError):
    pass


class FieldMismatch(UntwistError):
    pass


class SelfSlide(UntwistError):
    pass


class SlideOverLinkComponent(UntwistError):
    pass


class NonUnitFraming(UntwistError):
    pass


class NotSurgeryComponent(UntwistError):
    pass


class InvalidPresentation(UntwistError):
    pass


class MalformedJson(UntwistError):
    """JSON could not be decoded; ``line`` and ``column`` locate the problem."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaViolation(UntwistError):
    """Decoded JSON does not fit the expected schema.

    ``field`` is a dotted/indexed path such as ``matrix[1][0]``.
    """

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
