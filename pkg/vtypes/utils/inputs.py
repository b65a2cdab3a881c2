"""Loading command inputs: diagram and element files, or gallery names."""
from vtypes import gallery
from vtypes.type_systems import load_system, parse_diagram
from vtypes.utils.errors import VTypesError
from vtypes.v_elements import parse_element


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise VTypesError(f"cannot read {path}: {e.strerror}", path=path) from None


def read_system(source):
    """A ``.lts`` path, or ``@name`` for a gallery diagram."""
    if source.startswith("@"):
        return gallery.named_diagram(source[1:])
    return load_system(_read(source))


def read_element(source):
    if source.startswith("@"):
        return parse_element(gallery.element_text(source[1:]))
    return parse_element(_read(source))


def read_diagram(source):
    """Like ``read_system`` but without the reducedness check."""
    if source.startswith("@"):
        return parse_diagram(gallery.diagram_text(source[1:]))
    return parse_diagram(_read(source))
