''' Karatsuba multiplication over padded coefficient registers.

Both factors are read as polynomials in t = 2^p with K pieces of p bits. The
product's 2K-1 coefficients accumulate into separate registers of
W = 2p + bitlength(K) + 1 bits, wide enough that every final coefficient
fits exactly. Arithmetic on each coefficient register is independent mod 2^W,
so intermediate overflow is harmless.

With x = x0 + t^h x1 and y = y0 + t^h y1,

  x*y = x0*y0 (1 - t^h) + t^h (x0 + x1)(y0 + y1) - t^h x1*y1 (1 - t^h)

Multiplying a window of registers by (1 - t^h) is undone by the prefix sum
over stride h, so each outer term is added by conjugating the recursive call
with that prefix sum. The middle term needs piece sums, computed into
borrowed registers and uncomputed afterwards.

The coefficients are then carry-fused into a, and the workspace is cleared
by running the accumulation again onto its complement.
'''
import logging
import typing as t
from qmul.spec import Register
from qmul.arith.circuit import Circuit, Const, Operand
from qmul.arith.adder import emit_inplace_add, emit_inplace_sub, emit_not, emit_copy
from qmul.arith.schoolbook import emit_multiply_add, allocate_operands, build_schoolbook
from qmul.arith.spec import MultiplySpec, MultiplierRegisters

logger = logging.getLogger(__name__)

def piece_width(n: int, threshold: int) -> int:
  ''' The first of n, n/2, n/4, ... (rounded up) that fits under the threshold '''
  k = 0
  while -(-n // (1 << k)) > threshold:
    k += 1
  return -(-n // (1 << k))

def coefficient_width(p: int, pieces: int) -> int:
  return 2 * p + pieces.bit_length() + 1

def split(operand: Operand, p: int) -> t.List[Operand]:
  if isinstance(operand, Const):
    return [
      Const(operand.value >> lo & ((1 << min(p, operand.width - lo)) - 1), min(p, operand.width - lo))
      for lo in range(0, operand.width, p)
    ]
  return [operand[lo:lo + p] for lo in range(0, len(operand), p)]

def _prefix_sum(circuit: Circuit, window: t.Sequence[Register], h: int):
  for i in range(h, len(window)):
    emit_inplace_add(circuit, window[i], window[i - h])

def _prefix_diff(circuit: Circuit, window: t.Sequence[Register], h: int):
  for i in reversed(range(h, len(window))):
    emit_inplace_sub(circuit, window[i], window[i - h])

def _complement(circuit: Circuit, registers: t.Sequence[Register]):
  for register in registers:
    emit_not(circuit, register)

class PieceSums:
  ''' low[j] + high[j] for every j, reusing low[j] where high has no piece '''
  def __init__(self, circuit: Circuit, low: t.Sequence[Operand], high: t.Sequence[Operand]):
    self.circuit = circuit
    self.low = low
    self.high = high
    self._borrowed: t.List[t.Tuple[Register, Operand, Operand]] = []

  def __enter__(self) -> t.List[Operand]:
    sums = []
    for j, lo in enumerate(self.low):
      if j >= len(self.high):
        sums.append(lo)
        continue
      hi = self.high[j]
      width = max(len(lo), len(hi)) + 1
      if isinstance(lo, Const):
        sums.append(Const(lo.value + hi.value, width))
        continue
      total = self.circuit.borrow(width)
      emit_copy(self.circuit, lo, total)
      emit_inplace_add(self.circuit, total, hi)
      self._borrowed.append((total, lo, hi))
      sums.append(total)
    return sums

  def __exit__(self, *exc):
    for total, lo, hi in reversed(self._borrowed):
      emit_inplace_sub(self.circuit, total, hi)
      emit_copy(self.circuit, lo, total)
      self.circuit.give_back(total)
    self._borrowed.clear()

def multiply_accumulate(circuit: Circuit, out: t.Sequence[Register], xs: t.Sequence[Operand], ys: t.Sequence[Operand]):
  ''' out[k] += sum over i+j=k of xs[i]*ys[j], each register mod its own width '''
  K = len(xs)
  if K == 1:
    emit_multiply_add(circuit, out[0], xs[0], ys[0])
    return
  h = (K + 1) // 2
  # x0*y0 (1 - t^h)
  window = out[:min(len(out), 3 * h - 1)]
  _prefix_sum(circuit, window, h)
  multiply_accumulate(circuit, out[:2 * h - 1], xs[:h], ys[:h])
  _prefix_diff(circuit, window, h)
  # -t^h x1*y1 (1 - t^h)
  window, m = out[h:], 2 * (K - h) - 1
  _prefix_sum(circuit, window, h)
  _complement(circuit, window[:m])
  multiply_accumulate(circuit, window[:m], xs[h:], ys[h:])
  _complement(circuit, window[:m])
  _prefix_diff(circuit, window, h)
  # t^h (x0 + x1)(y0 + y1)
  with PieceSums(circuit, xs[:h], xs[h:]) as sx, PieceSums(circuit, ys[:h], ys[h:]) as sy:
    multiply_accumulate(circuit, out[h:3 * h - 1], sx, sy)

def build_karatsuba(spec: MultiplySpec, c_constant: t.Optional[int], circuit: Circuit) -> MultiplierRegisters:
  n = spec.n
  if n <= spec.karatsuba_threshold:
    return build_schoolbook(spec, c_constant, circuit)
  a, b, c = allocate_operands(circuit, spec)
  p = piece_width(n, spec.karatsuba_threshold)
  xs = split(b, p)
  ys = split(c if c is not None else Const(c_constant, n), p)
  K = len(xs)
  L, W = 2 * K - 1, coefficient_width(p, K)
  logger.debug(f"karatsuba n={n} pieces={K}x{p} coefficients={L}x{W}")
  workspace = circuit.borrow(L * W)
  out = [workspace[i * W:(i + 1) * W] for i in range(L)]
  multiply_accumulate(circuit, out, xs, ys)
  for i in range(L - 1):
    emit_inplace_add(circuit, out[i + 1], out[i][p:])
  digits = tuple(q for register in out[:-1] for q in register[:p]) + tuple(out[-1])
  emit_inplace_add(circuit, a, digits[:2 * n])
  for i in reversed(range(L - 1)):
    emit_inplace_sub(circuit, out[i + 1], out[i][p:])
  _complement(circuit, out)
  multiply_accumulate(circuit, out, xs, ys)
  _complement(circuit, out)
  circuit.give_back(workspace)
  return MultiplierRegisters(a, b, c, circuit.qubit_count)
