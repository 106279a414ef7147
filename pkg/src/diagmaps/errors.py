"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`DomainError`
(the CLI maps it to exit code 1) or :class:`InputError` (exit code 2).
"""


class DomainError(Exception):
    """A well-formed request that has no answer in the mathematical domain."""


class InputError(ValueError):
    """Malformed input: bad JSON, wrong shapes, unknown keys."""


class PresentationError(InputError):
    pass


class NotWellDefined(DomainError):
    """A matrix does not send relations into the target relation lattice."""


class ForeignElement(DomainError):
    pass


class InfiniteEnumeration(DomainError):
    """Enumeration was requested over an infinite group."""


class UnsupportedDimension(DomainError):
    def __init__(self, n, supported=range(2, 8)):
        self.n = n
        super().__init__(
            f"unsupported dimension n={n}; the sphere table covers "
            f"{supported.start} <= n <= {supported.stop - 1}"
        )


class MixedDimension(DomainError):
    pass


class NotInM(DomainError):
    """For even n only matrices with entries in {0, 1} act on V_n + V_n."""


class SplitNotAssumed(DomainError):
    """Composition over the odd-n extension needs an explicit split assumption."""
