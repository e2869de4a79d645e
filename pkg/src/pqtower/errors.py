"""Exception types shared across the package."""


class PqTowerError(Exception):
    """Base class for all domain errors raised by this package."""


class NonAssociative(PqTowerError):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"associativity fails at triple ({i}, {j}, {k})")


class NoIdentity(PqTowerError):
    def __init__(self):
        super().__init__("table has no two-sided identity element")


class NoInverse(PqTowerError):
    def __init__(self, i: int):
        self.element = i
        super().__init__(f"element {i} has no two-sided inverse")


class NotLatinSquare(PqTowerError):
    def __init__(self, kind: str, index: int):
        self.kind = kind
        self.index = index
        super().__init__(f"{kind} {index} of the table is not a permutation")


class NotNormal(PqTowerError):
    def __init__(self, msg: str = "subgroup is not normal"):
        super().__init__(msg)


class NotAbelian(PqTowerError):
    def __init__(self, msg: str = "group is not abelian"):
        super().__init__(msg)


class NotASubgroup(PqTowerError):
    def __init__(self, msg: str):
        super().__init__(msg)


class CapExceeded(PqTowerError):
    def __init__(self, needed: int, cap: int, what: str = "group order"):
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what} {needed} exceeds the configured cap {cap}")


class NoRootOfUnity(PqTowerError):
    def __init__(self, p: int, q: int):
        super().__init__(f"F_{q} has no primitive {p}-th root of unity ({p} does not divide {q - 1})")


class GroupMismatch(PqTowerError):
    def __init__(self, msg: str = "representations belong to different groups"):
        super().__init__(msg)


class NoEmbedding(PqTowerError):
    def __init__(self, msg: str = "equivariant hom space is zero"):
        super().__init__(msg)


class ParameterMismatch(PqTowerError):
    def __init__(self, msg: str = "elements come from families with different parameters"):
        super().__init__(msg)


class Ramified(PqTowerError):
    def __init__(self, q: int):
        super().__init__(f"prime {q} ramifies in Z[w]")


class SearchExhausted(PqTowerError):
    def __init__(self, what: str, bound: int):
        self.bound = bound
        super().__init__(f"search for {what} exhausted below bound {bound}")


class NoCubeRoot(PqTowerError):
    def __init__(self, a: int, q: int):
        super().__init__(f"{a} has no cube root mod {q} (split condition violated)")


class DivisionFailure(PqTowerError):
    def __init__(self, msg: str = "division by a zero conjugate product"):
        super().__init__(msg)


class UnsupportedDegree(PqTowerError):
    def __init__(self, d: int):
        super().__init__(f"local extension census only covers degrees 1..3, got {d}")
