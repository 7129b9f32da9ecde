''' Parameters and results shared by the multiplication builders
'''
import typing as t
import operator
import functools
import dataclasses
from qmul.spec import Register, InvalidArgument, UnsupportedMode

Algorithm = t.Literal['schoolbook', 'karatsuba', 'windowed'] if getattr(t, 'Literal', None) else str
Mode = t.Literal['qq', 'qc'] if getattr(t, 'Literal', None) else str

ALGORITHMS = ('schoolbook', 'karatsuba', 'windowed')
MODES = ('qq', 'qc')
MAX_WINDOW = 16
DEFAULT_KARATSUBA_THRESHOLD = 16

@dataclasses.dataclass(frozen=True)
class MultiplySpec:
  ''' a += b*c with a 2n-bit accumulator and n-bit factors.

  In `qc` mode the factor c is a compile-time constant. `window=None` means the
  window is chosen by the cost model.
  '''
  algorithm: Algorithm
  n: int
  mode: Mode = 'qc'
  karatsuba_threshold: int = DEFAULT_KARATSUBA_THRESHOLD
  window: t.Optional[int] = None

  def __post_init__(self):
    if self.algorithm not in ALGORITHMS: raise InvalidArgument(f"Unknown algorithm {self.algorithm!r}, expected one of {ALGORITHMS}")
    if self.mode not in MODES: raise InvalidArgument(f"Unknown mode {self.mode!r}, expected one of {MODES}")
    if self.n < 1: raise InvalidArgument(f"n must be positive, got {self.n}")
    if self.karatsuba_threshold < 2: raise InvalidArgument(f"karatsuba_threshold must be at least 2, got {self.karatsuba_threshold}")
    if self.window is not None and not 1 <= self.window <= MAX_WINDOW:
      raise InvalidArgument(f"window must be in [1, {MAX_WINDOW}], got {self.window}")
    if self.algorithm == 'windowed' and self.mode != 'qc':
      raise UnsupportedMode('windowed multiplication needs a classical factor (mode qc)')

  def check_constant(self, c_constant: t.Optional[int]):
    if self.mode == 'qq':
      if c_constant is not None: raise InvalidArgument('mode qq takes no classical constant')
    else:
      if c_constant is None: raise InvalidArgument('mode qc needs a classical constant')
      if not 0 <= c_constant < (1 << self.n):
        raise InvalidArgument(f"constant {c_constant} does not fit in {self.n} bits")

  def to_dict(self) -> t.Dict[str, t.Any]:
    return dataclasses.asdict(self)

  @staticmethod
  def from_dict(**kwargs) -> 'MultiplySpec':
    return MultiplySpec(**kwargs)

@dataclasses.dataclass(frozen=True)
class MultiplierRegisters:
  a: Register
  b: Register
  c: t.Optional[Register]
  qubit_count: int

  @property
  def io(self) -> t.Tuple[Register, ...]:
    return tuple(r for r in (self.a, self.b, self.c) if r is not None)

@dataclasses.dataclass(frozen=True)
class LookupTable:
  address_bits: int
  entries: t.Tuple[int, ...]
  entry_width: int

  def __post_init__(self):
    if self.address_bits < 1: raise InvalidArgument('A lookup table needs at least one address bit')
    if self.entry_width < 1: raise InvalidArgument('Lookup entries need at least one bit')
    if len(self.entries) != 1 << self.address_bits:
      raise InvalidArgument(f"Expected {1 << self.address_bits} entries, got {len(self.entries)}")
    if any(not 0 <= e < (1 << self.entry_width) for e in self.entries):
      raise InvalidArgument(f"Every entry must fit in {self.entry_width} bits")

  @functools.cached_property
  def set_bits(self) -> int:
    ''' Total number of one bits over all entries '''
    return sum(bin(e).count('1') for e in self.entries)

  @functools.cached_property
  def union(self) -> int:
    return functools.reduce(operator.or_, self.entries, 0)

  @staticmethod
  def multiples(address_bits: int, factor: int, entry_width: int) -> 'LookupTable':
    ''' The table v -> v*factor mod 2^entry_width '''
    mask = (1 << entry_width) - 1
    return LookupTable(address_bits, tuple((v * factor) & mask for v in range(1 << address_bits)), entry_width)
