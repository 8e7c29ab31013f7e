"""Exception hierarchy."""


class HomologyError(Exception):
    """Base class for every error raised by simphom."""


class MalformedPermutation(HomologyError, ValueError):
    pass


class DuplicateVertex(HomologyError, ValueError):
    pass


class DimensionMismatch(HomologyError, ValueError):
    pass


class MissingGenerator(HomologyError, KeyError):
    pass


class ForeignSimplex(HomologyError, ValueError):
    """A chain mentions a simplex that is not in the complex."""


class ParseError(HomologyError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateVertexInSimplex(ParseError, DuplicateVertex):
    pass


class UnknownBuiltin(HomologyError, KeyError):
    def __init__(self, name, valid):
        self.name = name
        self.valid = tuple(valid)
        super().__init__(f"unknown builtin {name!r}; valid names: {', '.join(self.valid)}")

    def __str__(self):
        return self.args[0]
