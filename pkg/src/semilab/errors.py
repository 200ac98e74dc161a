"""Exception types raised across semilab."""


class SemilabError(Exception):
    """Base class; every input error the CLI maps to exit code 2 derives from it."""


class TableShapeError(SemilabError):
    pass


class OutOfRangeEntry(SemilabError):
    def __init__(self, i: int, j: int, value: int):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"OutOfRangeEntry({i}, {j}, {value}): product entry outside [0, n)")


class NotAssociative(SemilabError):
    def __init__(self, i: int, j: int, k: int):
        self.i, self.j, self.k = i, j, k
        super().__init__(f"NotAssociative({i}, {j}, {k}): ({i}*{j})*{k} != {i}*({j}*{k})")


class NotAmiable(SemilabError):
    """A starred class holds zero or several idempotents."""

    def __init__(self, relation: str, members: tuple[int, ...], idempotent_count: int):
        self.relation = relation
        self.members = members
        self.idempotent_count = idempotent_count
        super().__init__(
            f"NotAmiable: {relation}-class {set(members)} has {idempotent_count} idempotents"
        )


class NotAmiableInput(SemilabError):
    """An operation that presumes amiability received a non-amiable table."""


class SgtParseError(SemilabError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


class WordParseError(SemilabError):
    pass
