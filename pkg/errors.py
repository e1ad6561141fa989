from typing import Optional


class BurlingError(Exception):
    """Base error; `code` is the short machine-readable reason."""

    def __init__(self, code: str, detail: Optional[str] = None):
        self.code = code
        self.detail = detail
        super().__init__(f"{code}: {detail}" if detail else code)

    def as_dict(self) -> dict:
        return {"code": self.code, "detail": self.detail}


class GeometryError(BurlingError):
    pass


class ShapeError(BurlingError):
    pass


class ConstraintError(BurlingError):
    pass


class ConstructionError(BurlingError):
    pass


class GraphError(BurlingError):
    pass


class DocumentError(BurlingError):
    pass
