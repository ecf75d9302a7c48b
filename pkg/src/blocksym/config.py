"""
Run configuration for the blocksym command line.

The argparse namespace is turned into a validated ``RunConfig``; comma lists
such as ``--r 2,0,2,1,3`` are parsed by before-validators and any pydantic
failure is re-raised as ``BlockSymInputError`` naming the offending flag.

Classes:
    WeightMode: Weight used for generating functions.
    OutputFormat: How results are printed.
    CountMethod: Which counter ``count`` uses.
    SizeLimits: Enumeration limits.
    RunConfig: Everything one CLI invocation needs.
"""

from argparse import Namespace
from enum import Enum
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, ValidationError, conint, field_validator, BeforeValidator
from typing_extensions import List, Annotated

from blocksym.exceptions import BlockSymInputError
from blocksym.logger import logger
from blocksym.planepartitions import PP_MAX_CELLS, PP_MAX_HEIGHT
from blocksym.shapes import BlockProfile, Partition
from blocksym.tilings import MAX_TILINGS

MAX_THREADS = 5

FLAGS = {
    'r': "--r",
    'rprime': "--rprime",
    'hex': "--hex",
    'trap': "--trap",
    'P': "--P",
    'Pprime': "--Pprime",
    'lambda_': "--lambda",
    'mu': "--mu",
    'max_scale': "--max",
    'unsafe_max': "--unsafe-max",
    'fmt': "--format",
}


def parse_int_list(value: Any) -> Any:
    """Accepts ``"1,2,3"``, ``"(1,2,3)"`` or an iterable of ints."""
    if value is None or isinstance(value, (list, tuple)):
        return value
    if isinstance(value, str):
        text = value.strip().strip("()[]{}").strip()
        if not text:
            return []
        try:
            return [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"expected a comma separated list of integers, got {value!r}")
    raise ValueError(f"expected a list of integers, got {value!r}")


IntList = Annotated[Optional[List[conint(ge=0)]], BeforeValidator(parse_int_list)]
Triple = Annotated[Optional[List[conint(ge=1)]], BeforeValidator(parse_int_list)]
Pair = Annotated[Optional[List[conint(ge=0)]], BeforeValidator(parse_int_list)]


class WeightMode(Enum):
    X = "x"
    QT = "qt"
    NUMERIC = "numeric"


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    SVG = "svg"


class CountMethod(Enum):
    FORMULA = "formula"
    TILER = "tiler"
    HEXAGON = "hexagon"


class SizeLimits(BaseModel):
    max_tilings: conint(ge=1) = MAX_TILINGS
    pp_max_cells: conint(ge=1) = PP_MAX_CELLS
    pp_max_height: conint(ge=1) = PP_MAX_HEIGHT


class RunConfig(BaseModel):
    """
    A validated CLI invocation.

    ``command`` is the subcommand and ``action`` its positional choice
    (``count``/``list``/``genfun`` for tilings, the formula name, the suite
    name, ...).
    """
    command: str
    action: Optional[str] = None

    r: IntList = None
    rprime: IntList = None
    hex: Triple = None
    trap: Pair = None
    P: IntList = None
    Pprime: IntList = None

    a: Optional[conint(ge=0)] = None
    b: Optional[conint(ge=0)] = None
    c: Optional[conint(ge=0)] = None
    m: Optional[conint(ge=0)] = None
    n: Optional[conint(ge=0)] = None

    lambda_: IntList = None
    mu: IntList = None
    principal: bool = False

    weight: Optional[WeightMode] = None
    method: CountMethod = CountMethod.FORMULA
    signed: bool = False
    q: bool = False

    limits: SizeLimits = SizeLimits()
    fmt: OutputFormat = OutputFormat.TEXT
    out: Optional[Path] = None
    index: conint(ge=0) = 0
    seed: Optional[int] = None
    max_scale: Optional[conint(ge=1)] = None
    jobs: conint(ge=1, le=64) = MAX_THREADS

    @field_validator('hex', mode='after')
    @classmethod
    def _hex_is_triple(cls, value):
        if value is not None and len(value) != 3:
            raise ValueError("expected A,B,C")
        return value

    @field_validator('trap', mode='after')
    @classmethod
    def _trap_is_pair(cls, value):
        if value is not None and len(value) != 2:
            raise ValueError("expected HEIGHT,M")
        return value

    @field_validator('P', 'Pprime', mode='after')
    @classmethod
    def _labels_positive(cls, value):
        if value is not None and any(v < 1 for v in value):
            raise ValueError("dent labels start at 1")
        return value

    def profile(self, prime: bool = False) -> Optional[BlockProfile]:
        """The ``--r`` (or ``--rprime``) list as a BlockProfile."""
        value = self.rprime if prime else self.r
        if value is None:
            return None
        return BlockProfile(tuple(value))

    def partition(self, name: str) -> Partition:
        """``--lambda`` or ``--mu`` as a Partition; empty when not given."""
        value = getattr(self, name)
        try:
            return Partition(tuple(value or ()))
        except BlockSymInputError as err:
            err.flag = FLAGS[name]
            raise

    def require(self, *names: str) -> None:
        """
        Raises:
            BlockSymInputError: If one of the named options was not given.
        """
        for name in names:
            if getattr(self, name) is None:
                raise BlockSymInputError(f"option is required for '{self.command}'", FLAGS.get(name, f"--{name}"))

    @classmethod
    def from_namespace(cls, ns: Namespace) -> 'RunConfig':
        """
        Builds and validates the configuration of one invocation.

        Args:
            ns (Namespace): Parsed command-line arguments.

        Returns:
            RunConfig: The validated configuration.

        Raises:
            BlockSymInputError: If validation fails; the flag of the first
                failing field is attached.
        """
        data = {k: v for k, v in vars(ns).items() if v is not None}
        for key in ('verbose', 'quiet'):
            data.pop(key, None)
        unsafe_max = data.pop('unsafe_max', None)
        if unsafe_max is not None:
            if unsafe_max < 1:
                raise BlockSymInputError(f"size limit must be positive, got {unsafe_max}", "--unsafe-max")
            logger.warning(f"size limits replaced by --unsafe-max {unsafe_max}; enumeration may be very slow")
            data['limits'] = SizeLimits(max_tilings=unsafe_max, pp_max_cells=unsafe_max,
                                        pp_max_height=unsafe_max)
        try:
            return cls(**data)
        except ValidationError as err:
            first = err.errors()[0]
            field = str(first['loc'][0]) if first['loc'] else "command"
            raise BlockSymInputError(first['msg'], FLAGS.get(field, f"--{field}")) from err


__all__ = (
    'MAX_THREADS',
    'WeightMode',
    'OutputFormat',
    'CountMethod',
    'SizeLimits',
    'RunConfig',
    'parse_int_list',
)
