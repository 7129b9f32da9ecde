''' Table lookup by unary iteration and its measurement-based uncompute.

For k address bits the lookup walks a binary tree of AND ancillas, one per
level, with the most significant address bit at the root:

  Toffoli      2^k - 1
  X            2^(k+1)
  CNOT         2^k - 1 plus one per set bit over all entries
  measurement  none; each AND ancilla is cleared by a measurement-based
               uncompute (2^k - 1 of them), tallied apart from measurements

The unlookup releases the output register, the only measured register, and
emits the phase fixup: a one-hot decode of the low ceil(k/2) address bits
followed by a unary iteration over the high floor(k/2) bits, for at most
2^ceil(k/2) + 2^floor(k/2) Toffolis. The decode is undone with AND
uncomputes so the one-hot register ends clean. The phase corrections
themselves are diagonal and do not appear in the gate stream.
'''
import typing as t
import dataclasses
from qmul.spec import Gate, CircuitTally, Qubits, QubitId, Register, InvalidArgument, X, CNOT, TOFFOLI, UNAND, RELEASE
from qmul.arith.circuit import Block, Circuit, highwater_of, disjoint
from qmul.arith.spec import LookupTable

Leaf = t.Callable[[int, QubitId], t.Iterator[Gate]]

def unary_iteration(control: QubitId, bits: Qubits, ancillas: Qubits, leaf: Leaf, prefix: int = 0) -> t.Iterator[Gate]:
  if not bits:
    yield from leaf(prefix, control)
    return
  bit, anc = bits[-1], ancillas[0]
  yield X(bit)
  yield TOFFOLI(control, bit, anc)
  yield X(bit)
  yield from unary_iteration(anc, bits[:-1], ancillas[1:], leaf, prefix << 1)
  yield CNOT(control, anc)
  yield from unary_iteration(anc, bits[:-1], ancillas[1:], leaf, prefix << 1 | 1)
  yield UNAND(control, bit, anc)

def _no_leaf(index: int, control: QubitId):
  return iter(())

def _iteration_tally(k: int) -> CircuitTally:
  nodes = (1 << k) - 1
  return CircuitTally(toffoli=nodes, x=2 + 2 * nodes, cnot=nodes, and_uncomputes=nodes)

@dataclasses.dataclass(frozen=True)
class Lookup(Block):
  address: Qubits
  table: LookupTable
  output: Qubits
  root: QubitId
  ancillas: Qubits

  def _leaf(self, index: int, control: QubitId):
    entry = self.table.entries[index]
    for j in range(self.table.entry_width):
      if entry >> j & 1:
        yield CNOT(control, self.output[j])

  def gates(self):
    yield X(self.root)
    yield from unary_iteration(self.root, self.address, self.ancillas, self._leaf)
    yield X(self.root)

  def tally(self):
    union = self.table.union
    written = (self.output[union.bit_length() - 1],) if union else ()
    return dataclasses.replace(_iteration_tally(len(self.address)),
      qubit_highwater=highwater_of(self.address, (self.root,), self.ancillas, written),
      cnot=(1 << len(self.address)) - 1 + self.table.set_bits,
    )

@dataclasses.dataclass(frozen=True)
class Unlookup(Block):
  output: Register
  address: Qubits
  onehot: Register
  root: t.Optional[QubitId] = None
  ancillas: Qubits = ()

  @property
  def low(self) -> Qubits:
    return self.address[:(len(self.address) + 1) // 2]

  @property
  def high(self) -> Qubits:
    return self.address[(len(self.address) + 1) // 2:]

  def gates(self):
    yield RELEASE(self.output)
    u = self.onehot
    yield X(u[0])
    for i, bit in enumerate(self.low):
      for j in range(1 << i):
        yield TOFFOLI(bit, u[j], u[j + (1 << i)])
        yield CNOT(u[j + (1 << i)], u[j])
    if self.high:
      yield X(self.root)
      yield from unary_iteration(self.root, self.high, self.ancillas, _no_leaf)
      yield X(self.root)
    for i, bit in reversed(list(enumerate(self.low))):
      for j in range(1 << i):
        yield CNOT(u[j + (1 << i)], u[j])
        yield UNAND(bit, u[j], u[j + (1 << i)])
    yield X(u[0])

  def tally(self):
    decode = len(self.onehot) - 1
    tally = CircuitTally(
      qubit_highwater=highwater_of(self.output, self.low, self.onehot),
      toffoli=decode,
      cnot=2 * decode,
      x=2,
      measurements=len(self.output),
      and_uncomputes=decode,
    )
    if self.high:
      skeleton = dataclasses.replace(_iteration_tally(len(self.high)),
        qubit_highwater=highwater_of(self.high, (self.root,), self.ancillas),
      )
      tally = tally + skeleton
    return tally

def lookup_toffoli(k: int) -> int:
  return (1 << k) - 1

def unlookup_toffoli(k: int) -> int:
  return (1 << (k + 1) // 2) - 1 + (1 << k // 2) - 1

def build_lookup(address: Qubits, table: LookupTable, output: Qubits, circuit: Circuit):
  ''' output ^= table[address]; output must start at zero '''
  if len(address) != table.address_bits:
    raise InvalidArgument(f"Address has {len(address)} bits, table expects {table.address_bits}")
  if len(output) != table.entry_width:
    raise InvalidArgument(f"Output has {len(output)} bits, table entries are {table.entry_width} bits")
  if not disjoint(address, output):
    raise InvalidArgument('Address and output must not overlap')
  root = circuit.borrow(1)
  ancillas = circuit.borrow(table.address_bits)
  circuit.emit(Lookup(address, table, output, root[0], ancillas))
  circuit.give_back(ancillas)
  circuit.give_back(root)

def build_unlookup(output: Register, address: Qubits, table: LookupTable, circuit: Circuit):
  ''' Erase a looked-up value by measurement; the output register ends released '''
  if len(address) != table.address_bits:
    raise InvalidArgument(f"Address has {len(address)} bits, table expects {table.address_bits}")
  if len(output) != table.entry_width:
    raise InvalidArgument(f"Output has {len(output)} bits, table entries are {table.entry_width} bits")
  k = table.address_bits
  onehot = circuit.borrow(1 << (k + 1) // 2)
  root = circuit.borrow(1) if k // 2 else None
  ancillas = circuit.borrow(k // 2) if k // 2 else None
  circuit.emit(Unlookup(output, address, onehot, root[0] if root else None, ancillas or ()))
  if ancillas: circuit.give_back(ancillas)
  if root: circuit.give_back(root)
  circuit.give_back(onehot)
