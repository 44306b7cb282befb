# -*- coding: utf-8 -*-


class TropicalSpectraError(Exception):
    pass


class DimensionMismatchError(TropicalSpectraError):
    def __init__(self, left: int, right: int, operation: str):
        super().__init__(f"Dimension mismatch in {operation}: {left} != {right}")
        self.left = left
        self.right = right


class InvalidEntryError(TropicalSpectraError):
    pass


class AcyclicError(TropicalSpectraError):
    def __init__(self, *args):
        super().__init__(*args if args else ("The graph of the matrix has no circuit",))


class NotIrreducibleError(TropicalSpectraError):
    pass


class ZeroVectorError(TropicalSpectraError):
    def __init__(self, *args):
        super().__init__(*args if args else ("The vector is identically zero",))


class NotEigenvectorError(TropicalSpectraError):
    pass


class NotSuperEigenvectorError(TropicalSpectraError):
    pass


class NoCriticalNodesError(TropicalSpectraError):
    pass


class NoPathError(TropicalSpectraError):
    def __init__(self, i: int, j: int, length: int):
        super().__init__(f"No path of length {length} from node {i} to node {j}")
        self.i = i
        self.j = j
        self.length = length


class UnreachableBasepointError(TropicalSpectraError):
    def __init__(self, basepoint: int, nodes):
        super().__init__(
            f"Basepoint {basepoint} does not reach the window nodes {list(nodes)}"
        )
        self.basepoint = basepoint
        self.nodes = list(nodes)


class InvalidLambdaError(TropicalSpectraError):
    pass


class SearchCapReachedError(TropicalSpectraError):
    def __init__(self, cap: int, what: str):
        super().__init__(f"Search cap reached after {cap} rounds: {what}")
        self.cap = cap


class MatrixFormatError(TropicalSpectraError):
    def __init__(self, line_number: int, message: str):
        super().__init__(f"Line {line_number}: {message}")
        self.line_number = line_number


class UnknownKernelError(TropicalSpectraError):
    pass


class KernelSpecError(TropicalSpectraError):
    pass


class UsageError(TropicalSpectraError):
    pass


class VerificationFailedError(TropicalSpectraError):
    pass
