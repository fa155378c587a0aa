"""The worked arguments shipped with the package, as ``.syl`` files."""

from importlib import resources

from ..parser import Argument, parse_argument

EXAMPLES = tuple(f"example{i:02d}" for i in range(1, 19))
NAMES = (*EXAMPLES, "invalid_syllogism", "bone")


def path(name: str):
    return resources.files(__name__).joinpath(f"{name}.syl")


def text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")


def load(name: str) -> Argument:
    return parse_argument(text(name))
