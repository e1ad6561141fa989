from geometry.exact import Rect
from shapes.generators import frame


def make_frame(xlo, xhi, ylo, yhi, id="S"):
    return frame(Rect(xlo, xhi, ylo, yhi), id=id)
