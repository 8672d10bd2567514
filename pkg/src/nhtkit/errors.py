"""Exception hierarchy shared by every nhtkit module."""


class NhtError(ValueError):
    """Base class for all domain errors raised by nhtkit."""


class InvalidModulusError(NhtError):
    pass


class InvalidCoefficientsError(NhtError):
    pass


class InvalidKeyError(NhtError):
    """Coefficients do not satisfy the orthogonality conditions."""


class CostGuardError(NhtError):
    """An exhaustive request would exceed the configured candidate budget."""


class ContainerFormatError(NhtError):
    """Scramble container header or layout is malformed."""


class TruncatedPayloadError(ContainerFormatError):
    pass


class KeyMismatchError(NhtError):
    """Supplied key does not match the key recorded in a container."""


class CatalogSyntaxError(NhtError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
