"""Exception hierarchy shared by every module in the package."""


class EdgeDomError(Exception):
    """Base class for all errors raised by edgedom."""


class GraphError(EdgeDomError, ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.vertex = u


class OutOfRange(GraphError):
    def __init__(self, v, n):
        super().__init__(f"vertex {v} out of range for graph on {n} vertices")
        self.vertex = v
        self.n = n


class UnknownPattern(EdgeDomError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown pattern {self.name!r}"


class NotAnEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"({u}, {v}) is not an edge")
        self.edge = (u, v)


class NotAPed(EdgeDomError, ValueError):
    pass


class NotADim(EdgeDomError, ValueError):
    pass


class InvalidColoring(EdgeDomError, ValueError):
    pass


class NotTotal(InvalidColoring):
    def __init__(self, v):
        super().__init__(f"vertex {v} is uncolored")
        self.vertex = v


class TooLarge(EdgeDomError, ValueError):
    pass


class NotNsf(EdgeDomError, ValueError):
    def __init__(self, witness):
        super().__init__(f"graph is not neighborhood-star-free (vertex {witness})")
        self.witness = witness


class NotCricketFree(EdgeDomError, ValueError):
    def __init__(self, witness):
        super().__init__(f"graph contains an induced cricket on {list(witness)}")
        self.witness = tuple(witness)


class StructureViolation(EdgeDomError, RuntimeError):
    """An algorithm precondition was breached while building or merging the residual."""


class NoCompletion(StructureViolation):
    pass


class FormulaError(EdgeDomError, ValueError):
    pass


class NotVariableMonotone(FormulaError):
    def __init__(self, var):
        super().__init__(f"variable {var} occurs with both signs")
        self.variable = var


class NotPositive(FormulaError):
    pass


class NotCubic(FormulaError):
    def __init__(self, var, count):
        super().__init__(f"variable {var} occurs {count} times, expected 3")
        self.variable = var
        self.count = count


class NotMainTransformOutput(EdgeDomError, ValueError):
    pass


class FormatError(EdgeDomError, ValueError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
