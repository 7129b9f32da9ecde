''' The builder context: qubit allocation, a clean-ancilla pool and block emission.

Indices come from a single monotonically advancing allocator and are never
handed out twice. Ancillas returned to the pool are known to be zero and are
lent again to later blocks of the same build.
'''
import bisect
import contextlib
import logging
import typing as t
import dataclasses
from qmul.spec import (
  GateSink, Gate, Register, CircuitTally, Qubits, QubitId,
  InvalidArgument,
)

logger = logging.getLogger(__name__)

@dataclasses.dataclass(frozen=True)
class Const:
  ''' A classically known operand of `width` bits '''
  value: int
  width: int

  def __post_init__(self):
    if self.width < 1: raise InvalidArgument(f"Const width must be positive, got {self.width}")
    if not 0 <= self.value < (1 << self.width):
      raise InvalidArgument(f"Const {self.value} does not fit in {self.width} bits")

  def __len__(self) -> int:
    return self.width

  def truncated(self, width: int) -> int:
    return self.value & ((1 << width) - 1)

Operand = t.Union[Register, Qubits, Const]

def popcount(value: int) -> int:
  return bin(value).count('1')

def _top(group) -> int:
  if isinstance(group, Register): return group.stop - 1
  return max(group, default=-1)

def highwater_of(*qubit_groups: t.Iterable[QubitId]) -> int:
  return 1 + max((_top(group) for group in qubit_groups), default=-1)

class Block:
  ''' A fixed sequence of gates which also knows its own tally in closed form '''
  def gates(self) -> t.Iterator[Gate]:
    raise NotImplementedError()
  def tally(self) -> CircuitTally:
    raise NotImplementedError()

class Circuit:
  def __init__(self, sink: GateSink):
    self.sink = sink
    self._highwater = 0
    # disjoint free runs, sorted by start
    self._free: t.List[t.Tuple[int, int]] = []

  @property
  def qubit_count(self) -> int:
    return self._highwater

  def allocate(self, width: int) -> Register:
    if width < 1: raise InvalidArgument(f"Cannot allocate a register of width {width}")
    register = Register(self._highwater, width)
    self._highwater += width
    return register

  def borrow(self, width: int) -> Register:
    ''' Lend a zeroed register, preferring the smallest free run that fits '''
    if width < 1: raise InvalidArgument(f"Cannot borrow a register of width {width}")
    best = None
    for i, (start, size) in enumerate(self._free):
      if size >= width and (best is None or size < self._free[best][1]):
        best = i
    if best is not None:
      start, size = self._free.pop(best)
      if size > width:
        bisect.insort(self._free, (start + width, size - width))
      return Register(start, width)
    if self._free and sum(self._free[-1]) == self._highwater:
      start, size = self._free.pop()
      self.allocate(width - size)
      return Register(start, width)
    return self.allocate(width)

  def give_back(self, register: Register):
    ''' Return a register the caller has restored to zero '''
    run = (register.start, register.width)
    i = bisect.bisect(self._free, run)
    if i < len(self._free) and self._free[i][0] < register.stop: raise InvalidArgument(f"{register} is already free")
    if i > 0 and sum(self._free[i-1]) > register.start: raise InvalidArgument(f"{register} is already free")
    self._free.insert(i, run)
    if i + 1 < len(self._free) and sum(self._free[i]) == self._free[i+1][0]:
      start, size = self._free.pop(i)
      self._free[i] = (start, size + self._free[i][1])
    if i > 0 and sum(self._free[i-1]) == self._free[i][0]:
      start, size = self._free.pop(i)
      self._free[i-1] = (self._free[i-1][0], self._free[i-1][1] + size)

  @contextlib.contextmanager
  def scratch(self, width: int):
    register = self.borrow(width)
    try:
      yield register
    finally:
      self.give_back(register)

  def emit(self, block: Block):
    if self.sink.counts_only:
      self.sink.absorb(block.tally())
    else:
      for gate in block.gates():
        self.sink.gate(gate)

def allocate_register(allocator: Circuit, width: int) -> Register:
  ''' A fresh register past every index handed out so far, never taken from the ancilla pool '''
  return allocator.allocate(width)

def disjoint(*groups: Qubits) -> bool:
  registers = [group for group in groups if isinstance(group, Register)]
  for i, a in enumerate(registers):
    for b in registers[i+1:]:
      if a.start < b.stop and b.start < a.stop: return False
  seen = set()
  for group in groups:
    if isinstance(group, Register): continue
    for q in group:
      if q in seen or any(q in r for r in registers): return False
      seen.add(q)
  return True
