class OrdgenError(Exception):
    """Base class for every error raised by this package."""


class PosetError(OrdgenError):
    pass


class CycleError(PosetError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("relation has a cycle: " + " -> ".join(map(str, self.cycle)))


class TypeSysError(OrdgenError):
    pass


class TableError(TypeSysError):
    pass


class TypeSyntaxError(TypeSysError):
    pass


class AdmittabilityError(TypeSysError):
    pass


class SizeError(OrdgenError):
    pass
