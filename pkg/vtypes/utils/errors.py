"""Error types raised by vtypes operations.

Every error carries the CLI exit status it maps to: input problems exit 2,
an exhausted search exits 3.
"""


class VTypesError(Exception):
    exit_code = 2

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        return {"error": type(self).__name__, "message": self.message, **self.details}


class DepthTooSmall(VTypesError):
    def __init__(self, depth, needed):
        super().__init__(f"depth {depth} is below the deepest cone ({needed})", depth=depth, needed=needed)
        self.depth = depth
        self.needed = needed


class NotIncomparable(VTypesError):
    def __init__(self, a, b):
        super().__init__(f"addresses {a or 'e'} and {b or 'e'} are comparable", a=a, b=b)
        self.pair = (a, b)


class IncompletePartition(VTypesError):
    def __init__(self, addresses):
        shown = ", ".join(a or "e" for a in addresses)
        super().__init__(f"cones {{{shown}}} do not partition Cantor space", addresses=list(addresses))


class DiagramSyntaxError(VTypesError):
    def __init__(self, line_no, line, reason="malformed line"):
        super().__init__(f"line {line_no}: {reason}: {line!r}", line=line_no)
        self.line_no = line_no


class ElementSyntaxError(DiagramSyntaxError):
    pass


class UnknownLabel(VTypesError):
    def __init__(self, label):
        super().__init__(f"label {label!r} is referenced but never defined", label=label)
        self.label = label


class NoRoot(VTypesError):
    def __init__(self):
        super().__init__("diagram has no 'root' line")


class ReducednessViolation(VTypesError):
    def __init__(self, p, q, children):
        super().__init__(
            f"labels {p} and {q} both have children {children[0]} {children[1]}",
            pair=[p, q],
            children=list(children),
        )
        self.pair = (p, q)


class TooFewLabels(VTypesError):
    def __init__(self, count):
        super().__init__(f"need at least two labels, got {count}", labels=count)


class NotApplicable(VTypesError):
    def __init__(self, operation, kind):
        super().__init__(f"{operation} does not apply to a {kind} system", operation=operation, kind=str(kind))


class NonPrimitiveCycle(VTypesError):
    def __init__(self, word, root):
        super().__init__(f"cycle word {word} is a power of {root}", word=word, root=root)
        self.word = word


class SearchExhausted(VTypesError):
    exit_code = 3

    def __init__(self, budget, expansions):
        super().__init__(
            f"no matched decomposition within {budget} carets ({expansions} states expanded)",
            budget=budget,
            expansions=expansions,
        )
        self.budget = budget


class TypeMismatch(VTypesError):
    def __init__(self, left, right):
        super().__init__(f"s-types differ: {left} vs {right}", left=list(left), right=list(right))


class PreconditionViolated(VTypesError):
    def __init__(self, reason):
        super().__init__(reason)


class NotInStab(VTypesError):
    def __init__(self):
        super().__init__("element does not stabilize the type partition")


class SequenceExhausted(VTypesError):
    def __init__(self, index, available):
        super().__init__(
            f"sequence index {index} needed but only {available} terms given and no tail rule",
            index=index,
            available=available,
        )
        self.index = index
