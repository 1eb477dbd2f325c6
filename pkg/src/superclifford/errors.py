class AmbientMismatchError(ValueError):
    """Operands live in Clifford algebras with different generator counts."""


class HomogeneityError(ValueError):
    """A graded operation received an element that is neither even nor odd."""


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
