"""Named label diagrams shipped with the package."""
from importlib import resources

from vtypes.type_systems import diagram_from_table, load_system, validate
from vtypes.utils.errors import VTypesError


def _diagram_dir():
    return resources.files("vtypes").joinpath("diagrams")


def gallery_names():
    return sorted(p.name[:-4] for p in _diagram_dir().iterdir() if p.name.endswith(".lts"))


def diagram_text(name):
    path = _diagram_dir().joinpath(f"{name}.lts")
    if not path.is_file():
        raise VTypesError(f"no diagram named {name!r}", name=name, known=gallery_names())
    return path.read_text(encoding="utf-8")


def element_text(name):
    path = _diagram_dir().joinpath(f"{name}.vel")
    if not path.is_file():
        raise VTypesError(f"no element named {name!r}", name=name)
    return path.read_text(encoding="utf-8")


def named_diagram(name):
    return load_system(diagram_text(name))


def higman_thompson_diagram(n, root=1):
    """Labels 1..n-1: label i > 1 has children (1, i-1), label 1 has (n-1, 1)."""
    if n < 2:
        raise VTypesError(f"Higman-Thompson diagrams need n >= 2, got {n}", n=n)
    if not 1 <= root <= n - 1:
        raise VTypesError(f"root {root} is not a label 1..{n - 1}", root=root)
    table = {"1": (str(n - 1), "1")}
    for i in range(2, n):
        table[str(i)] = ("1", str(i - 1))
    return validate(diagram_from_table(table, str(root)))
