''' In-place ripple-carry addition and its controlled variants.

The adder is the majority/unmajority ripple adder with a single carry
ancilla. For an m-bit target it costs

  A(m) = 2(m-1) Toffolis and 4(m-1)+2 CNOTs   (m >= 2)
  A(1) = 0 Toffolis and 1 CNOT

The addend must be as wide as the target because its qubits carry the
running carries, so narrower addends are padded with borrowed zeros.
'''
import typing as t
import dataclasses
from qmul.spec import Gate, CircuitTally, Qubits, QubitId, Register, InvalidArgument, X, CNOT, TOFFOLI
from qmul.arith.circuit import Block, Circuit, Const, Operand, popcount, highwater_of, disjoint

def adder_toffoli(m: int) -> int:
  return 2 * (m - 1) if m >= 1 else 0

def adder_cnot(m: int) -> int:
  return 4 * (m - 1) + 2 if m >= 2 else m

def _maj(x, y, z):
  yield CNOT(z, y)
  yield CNOT(z, x)
  yield TOFFOLI(x, y, z)

def _uma(x, y, z):
  yield TOFFOLI(x, y, z)
  yield CNOT(z, x)
  yield CNOT(x, y)

@dataclasses.dataclass(frozen=True)
class RippleAdd(Block):
  ''' target += addend mod 2^m, with len(addend) == len(target) == m '''
  target: Qubits
  addend: Qubits
  carry: t.Optional[QubitId] = None
  # zeros extending a narrower addend to the target width
  pad: t.Optional[Qubits] = None

  @property
  def padded(self) -> Qubits:
    return tuple(self.addend) + tuple(self.pad) if self.pad else self.addend

  def gates(self):
    b, a, m = self.target, self.padded, len(self.target)
    if m == 1:
      yield CNOT(a[0], b[0])
      return
    yield from _maj(self.carry, b[0], a[0])
    for i in range(1, m - 1):
      yield from _maj(a[i-1], b[i], a[i])
    yield CNOT(a[m-1], b[m-1])
    yield CNOT(a[m-2], b[m-1])
    for i in range(m - 2, 0, -1):
      yield from _uma(a[i-1], b[i], a[i])
    yield from _uma(self.carry, b[0], a[0])

  def tally(self):
    m = len(self.target)
    touched = (self.target, self.addend, self.pad or ())
    if m >= 2: touched += ((self.carry,),)
    return CircuitTally(
      qubit_highwater=highwater_of(*touched),
      toffoli=adder_toffoli(m),
      cnot=adder_cnot(m),
    )

@dataclasses.dataclass(frozen=True)
class Not(Block):
  qubits: Qubits

  def gates(self):
    for q in self.qubits:
      yield X(q)

  def tally(self):
    return CircuitTally(qubit_highwater=highwater_of(self.qubits), x=len(self.qubits))

@dataclasses.dataclass(frozen=True)
class Copy(Block):
  ''' dst[:len(src)] ^= src '''
  src: Qubits
  dst: Qubits

  def gates(self):
    for s, d in zip(self.src, self.dst):
      yield CNOT(s, d)

  def tally(self):
    return CircuitTally(qubit_highwater=highwater_of(self.src, self.dst[:len(self.src)]), cnot=len(self.src))

@dataclasses.dataclass(frozen=True)
class ControlledAdd(Block):
  ''' target += control * addend mod 2^m.

  The addend is masked into the zeroed `scratch` register (Toffolis for a
  quantum addend, CNOTs for a classical one), ripple-added, then unmasked.
  '''
  control: QubitId
  target: Qubits
  addend: Operand
  scratch: Qubits
  carry: t.Optional[QubitId] = None

  def _mask(self) -> t.Iterator[Gate]:
    if isinstance(self.addend, Const):
      value = self.addend.value
      for j in range(len(self.scratch)):
        if value >> j & 1:
          yield CNOT(self.control, self.scratch[j])
    else:
      for j in range(len(self.addend)):
        yield TOFFOLI(self.control, self.addend[j], self.scratch[j])

  def gates(self):
    yield from self._mask()
    yield from RippleAdd(self.target, self.scratch, self.carry).gates()
    yield from self._mask()

  def tally(self):
    add = RippleAdd(self.target, self.scratch, self.carry).tally()
    if isinstance(self.addend, Const):
      masked = popcount(self.addend.value)
      touched = (self.control,) if masked else ()
      return dataclasses.replace(add,
        qubit_highwater=max(add.qubit_highwater, highwater_of(touched)),
        cnot=add.cnot + 2 * masked,
      )
    return dataclasses.replace(add,
      qubit_highwater=max(add.qubit_highwater, highwater_of((self.control,), self.addend)),
      toffoli=add.toffoli + 2 * len(self.addend),
    )

def _check_add(target: Qubits, addend: Operand, *controls: QubitId):
  if len(target) < 1: raise InvalidArgument('Empty target')
  if len(addend) > len(target):
    raise InvalidArgument(f"Addend ({len(addend)} bits) is wider than target ({len(target)} bits)")
  groups = [target, tuple(controls)]
  if not isinstance(addend, Const): groups.append(addend)
  if not disjoint(*groups):
    raise InvalidArgument('Target, addend and control must not overlap')

def emit_inplace_add(circuit: Circuit, target: Qubits, addend: Qubits):
  ''' target += addend mod 2^len(target); the addend is left unchanged '''
  _check_add(target, addend)
  m, k = len(target), len(addend)
  pad = circuit.borrow(m - k) if m > k else None
  carry = circuit.borrow(1) if m >= 2 else None
  circuit.emit(RippleAdd(target, addend, carry[0] if carry else None, pad))
  if carry: circuit.give_back(carry)
  if pad: circuit.give_back(pad)

def emit_copy_add(circuit: Circuit, target: Qubits, addend: Qubits):
  ''' target += addend mod 2^len(target), ripple-added from a zeroed copy of the addend.

  The addend register is only read; the copy in `scratch` carries the ripple.
  '''
  _check_add(target, addend)
  m = len(target)
  scratch = circuit.borrow(m)
  carry = circuit.borrow(1) if m >= 2 else None
  emit_copy(circuit, addend, scratch)
  circuit.emit(RippleAdd(target, scratch, carry[0] if carry else None))
  emit_copy(circuit, addend, scratch)
  if carry: circuit.give_back(carry)
  circuit.give_back(scratch)

def emit_not(circuit: Circuit, qubits: Qubits):
  circuit.emit(Not(qubits))

def emit_copy(circuit: Circuit, src: Qubits, dst: Qubits):
  if len(src) > len(dst): raise InvalidArgument('Copy destination is narrower than the source')
  circuit.emit(Copy(src, dst))

def emit_inplace_sub(circuit: Circuit, target: Qubits, addend: Qubits):
  ''' target -= addend mod 2^len(target), as ~(~target + addend) '''
  _check_add(target, addend)
  emit_not(circuit, target)
  emit_inplace_add(circuit, target, addend)
  emit_not(circuit, target)

def emit_controlled_add(circuit: Circuit, control: QubitId, target: Qubits, addend: Operand):
  ''' target += addend mod 2^len(target) iff control is set; addend may be a Const '''
  _check_add(target, addend, control)
  m = len(target)
  scratch = circuit.borrow(m)
  carry = circuit.borrow(1) if m >= 2 else None
  circuit.emit(ControlledAdd(control, target, addend, scratch, carry[0] if carry else None))
  if carry: circuit.give_back(carry)
  circuit.give_back(scratch)
