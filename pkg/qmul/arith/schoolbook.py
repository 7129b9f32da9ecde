''' Schoolbook shift-and-add multiplication.

Row r adds y, controlled by bit r of x, into acc[r:]. With a 2n-bit
accumulator the classical-factor form costs sum_r A(2n-r) = 3n^2 - n
Toffolis; a quantum factor adds 2n Toffolis per row for the mask, 5n^2 - n
in total.
'''
import logging
import typing as t
import dataclasses
from qmul.spec import CircuitTally, Qubits, QubitId, Register
from qmul.arith.circuit import Block, Circuit, Const, Operand, allocate_register, popcount, highwater_of
from qmul.arith.adder import ControlledAdd, adder_toffoli, adder_cnot, _check_add
from qmul.arith.spec import MultiplySpec, MultiplierRegisters

logger = logging.getLogger(__name__)

def truncate(operand: Operand, width: int) -> Operand:
  if len(operand) <= width: return operand
  if isinstance(operand, Const): return Const(operand.truncated(width), width)
  return operand[:width]

@dataclasses.dataclass(frozen=True)
class MultiplyAdd(Block):
  ''' acc += x*y mod 2^len(acc), one controlled add per bit of x sharing one scratch register '''
  acc: Qubits
  x: Qubits
  y: Operand
  scratch: Register
  carry: t.Optional[QubitId] = None

  @property
  def row_count(self) -> int:
    return min(len(self.x), len(self.acc))

  def rows(self) -> t.Iterator[ControlledAdd]:
    for r in range(self.row_count):
      target = self.acc[r:]
      m = len(target)
      yield ControlledAdd(self.x[r], target, truncate(self.y, m), self.scratch[:m], self.carry if m >= 2 else None)

  def gates(self):
    for row in self.rows():
      yield from row.gates()

  def tally(self):
    L, rows = len(self.acc), self.row_count
    toffoli = sum(adder_toffoli(L - r) for r in range(rows))
    cnot = sum(adder_cnot(L - r) for r in range(rows))
    if isinstance(self.y, Const):
      masked = [popcount(self.y.truncated(L - r)) for r in range(rows)]
      cnot += 2 * sum(masked)
      controls = [self.x[r] for r in range(rows) if masked[r]]
      operand = ()
    else:
      toffoli += 2 * sum(min(len(self.y), L - r) for r in range(rows))
      controls = self.x[:rows]
      operand = self.y[:min(len(self.y), L)]
    touched = [self.acc, self.scratch, controls, operand]
    if L >= 2: touched.append((self.carry,))
    return CircuitTally(qubit_highwater=highwater_of(*touched), toffoli=toffoli, cnot=cnot)

def emit_multiply_add(circuit: Circuit, acc: Qubits, x: Qubits, y: Operand):
  ''' acc += x*y mod 2^len(acc) '''
  for r in range(min(len(x), len(acc))):
    _check_add(acc[r:], truncate(y, len(acc) - r), x[r])
  scratch = circuit.borrow(len(acc))
  carry = circuit.borrow(1) if len(acc) >= 2 else None
  circuit.emit(MultiplyAdd(acc, x, y, scratch, carry[0] if carry else None))
  if carry: circuit.give_back(carry)
  circuit.give_back(scratch)

def allocate_operands(circuit: Circuit, spec: MultiplySpec):
  a = allocate_register(circuit, 2 * spec.n)
  b = allocate_register(circuit, spec.n)
  c = allocate_register(circuit, spec.n) if spec.mode == 'qq' else None
  return a, b, c

def build_schoolbook(spec: MultiplySpec, c_constant: t.Optional[int], circuit: Circuit) -> MultiplierRegisters:
  a, b, c = allocate_operands(circuit, spec)
  logger.debug(f"schoolbook n={spec.n} mode={spec.mode}")
  emit_multiply_add(circuit, a, b, c if c is not None else Const(c_constant, spec.n))
  return MultiplierRegisters(a, b, c, circuit.qubit_count)
