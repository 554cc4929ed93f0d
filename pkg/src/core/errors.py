"""
Exception hierarchy for the tiling engine
"""


class TilingEngineError(ValueError):
    """Base class for every domain error raised by the engine"""


class RankDeficientError(TilingEngineError):
    """Raised when the two basis vectors do not span a rank-2 lattice"""

    def __init__(self, message: str = "rank-deficient lattice"):
        super().__init__(message)


class InvalidTilingError(TilingEngineError):
    """Raised for cell words that are not Λ-periodic lozenge tilings"""


class CapExceededError(TilingEngineError):
    """Raised when an exhaustive computation would exceed its configured cap"""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} cap exceeded: index {size} > cap {cap}")
        self.size = size
        self.cap = cap


class HeightError(TilingEngineError):
    """Raised when a height function cannot be built"""


class UnrealizableFingerprintError(TilingEngineError):
    """Raised for fingerprints that no Λ-periodic tiling has"""

    def __init__(self, message: str = "unrealizable fingerprint"):
        super().__init__(message)


class TypeGeometryError(TilingEngineError):
    """Raised for impossible types and out-of-range closed-form arguments"""


class KasteleynError(TilingEngineError):
    """Raised when the four-determinant combination is not integral"""


class FlipError(TilingEngineError):
    """Raised for stale flip sites and unrealized types"""
