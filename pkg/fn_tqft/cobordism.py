"""
Cobordism words: sequences of mapping classes and handle attachments.
"""

from __future__ import annotations

import dataclasses
import logging
from enum import Enum
from typing import List, Mapping, Optional, Sequence, Tuple, Union

from exterior.symplectic import SymplecticMatrix
from utils.errors import InvalidSymplecticMatrix, InvalidWord

logger = logging.getLogger(__name__)


class HandleMove(Enum):
    """Elementary handle cobordisms."""
    ADD = "add_handle"         # g -> g + 1
    REMOVE = "remove_handle"   # g -> g - 1


Generator = Union[SymplecticMatrix, HandleMove]


@dataclasses.dataclass(frozen=True)
class CobordismWord:
    """
    A word of generators read left to right, starting at ``start_genus``.

    Mapping-class generators act on the current genus; AddHandle raises the
    genus by one and RemoveHandle lowers it by one.
    """

    start_genus: int
    ops: Tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        self.genus_sequence()

    def genus_sequence(self) -> List[int]:
        """Genus before the first op and after each op."""
        if self.start_genus < 0:
            raise InvalidWord(f"negative start genus {self.start_genus}")
        genera = [self.start_genus]
        for position, op in enumerate(self.ops):
            g = genera[-1]
            if isinstance(op, SymplecticMatrix):
                if op.genus != g:
                    raise InvalidWord(f"op {position}: genus-{op.genus} mapping class applied at genus {g}")
                genera.append(g)
            elif op is HandleMove.ADD:
                genera.append(g + 1)
            elif op is HandleMove.REMOVE:
                if g == 0:
                    raise InvalidWord(f"op {position}: cannot remove a handle at genus 0")
                genera.append(g - 1)
            else:
                raise InvalidWord(f"op {position}: unknown generator {op!r}")
        return genera

    @property
    def end_genus(self) -> int:
        return self.genus_sequence()[-1]

    def is_closed(self) -> bool:
        return self.start_genus == self.end_genus

    @property
    def sign_ambiguous(self) -> bool:
        """Words with handles are only defined up to an overall sign."""
        return any(isinstance(op, HandleMove) for op in self.ops)

    def require_closed(self):
        if not self.is_closed():
            raise InvalidWord(f"word runs from genus {self.start_genus} to {self.end_genus}; a trace needs a closed word")

    @classmethod
    def identity(cls, genus: int) -> CobordismWord:
        return cls(genus, ())

    @classmethod
    def mapping_class(cls, matrix: SymplecticMatrix) -> CobordismWord:
        return cls(matrix.genus, (matrix,))

    def then(self, other: CobordismWord) -> CobordismWord:
        """This word followed by ``other``."""
        if other.start_genus != self.end_genus:
            raise InvalidWord(f"cannot follow a genus-{self.end_genus} end with a genus-{other.start_genus} start")
        return CobordismWord(self.start_genus, self.ops + other.ops)

    def conjugate(self, matrix: SymplecticMatrix) -> CobordismWord:
        """The word M^-1 w M, for closed mapping-class words."""
        return CobordismWord(self.start_genus, (matrix.inverse(),) + self.ops + (matrix,))

    def to_json(self) -> dict:
        ops = [op.value if isinstance(op, HandleMove) else {"mcg": [list(r) for r in op.entries]}
               for op in self.ops]
        return {"start_g": self.start_genus, "ops": ops}

    @classmethod
    def from_json(cls, data: Mapping) -> CobordismWord:
        """
        Parse {"start_g": g, "ops": [{"mcg": [[...]]} | "add_handle" | "remove_handle", ...]}.

        Raises:
            InvalidWord: On malformed ops or inconsistent genus bookkeeping
        """
        ops: List[Generator] = []
        for position, raw in enumerate(data.get("ops", [])):
            if isinstance(raw, str):
                try:
                    ops.append(HandleMove(raw))
                except ValueError:
                    raise InvalidWord(f"op {position}: unknown generator {raw!r}")
            elif isinstance(raw, Mapping) and "mcg" in raw:
                try:
                    ops.append(SymplecticMatrix.from_rows(raw["mcg"]))
                except InvalidSymplecticMatrix as e:
                    raise InvalidWord(f"op {position}: {e}")
            else:
                raise InvalidWord(f"op {position}: expected 'add_handle', 'remove_handle' or {{'mcg': matrix}}")
        return cls(int(data["start_g"]), tuple(ops))

    def __str__(self) -> str:
        names = [op.value if isinstance(op, HandleMove) else f"mcg{op.genus}" for op in self.ops]
        return f"[g={self.start_genus}] " + (" . ".join(names) if names else "id")
