"""
Prelude loading

The shipped `prelude.lal` sits next to this module; LAMBDALIN_PRELUDE
points to a replacement file.
"""

import os
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from ..exceptions import ParseError, PreludeLoadException
from ..logger import get_logger
from ..terms import Term

logger = get_logger('prelude')

DEFAULT_PRELUDE_PATH = Path(__file__).with_name('prelude.lal')


class Prelude:
    """Named closed terms in definition order"""

    def __init__(self, bindings: List[Tuple[str, Term]], source: Optional[str] = None):
        self._bindings: Dict[str, Term] = dict(bindings)
        self.source = source

    def __getitem__(self, name: str) -> Term:
        return self._bindings[name]

    def __contains__(self, name: str) -> bool:
        return name in self._bindings

    def __iter__(self) -> Iterator[str]:
        return iter(self._bindings)

    def __len__(self) -> int:
        return len(self._bindings)

    def get(self, name: str, default: Optional[Term] = None) -> Optional[Term]:
        return self._bindings.get(name, default)

    def names(self) -> List[str]:
        return list(self._bindings)

    def as_dict(self) -> Dict[str, Term]:
        return dict(self._bindings)

    def extended(self, bindings: List[Tuple[str, Term]]) -> "Prelude":
        """New prelude with extra bindings appended"""
        return Prelude(list(self._bindings.items()) + list(bindings), self.source)

    @classmethod
    def empty(cls) -> "Prelude":
        return cls([])


def resolve_prelude_path(path: Optional[str] = None) -> Path:
    chosen = path or os.getenv('LAMBDALIN_PRELUDE') or None
    return Path(chosen) if chosen else DEFAULT_PRELUDE_PATH


@lru_cache(maxsize=8)
def _load(path: str) -> Prelude:
    from ..parser import parse_program

    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise PreludeLoadException(path, str(e))

    try:
        program = parse_program(text)
    except ParseError as e:
        raise PreludeLoadException(path, str(e))

    if program.main is not None:
        raise PreludeLoadException(path, "a prelude may only contain let-bindings")

    logger.info(f"Loaded prelude {path} ({len(program)} bindings)")
    return Prelude(program.bindings, source=path)


def load_prelude(path: Optional[str] = None) -> Prelude:
    """
    Load and cache a prelude file

    Raises:
        PreludeLoadException: If the file cannot be read or parsed
    """
    return _load(str(resolve_prelude_path(path)))
