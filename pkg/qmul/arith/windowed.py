''' Windowed multiplication by a classical constant.

b is cut into windows of w bits. For each window the multiples v*c of the
constant are looked up into a fresh register of n+w bits, added into a at the
window's offset and erased again by measurement. The add runs on a zeroed
copy of the looked-up value as wide as the slice of a it lands in, so the
lookup register and the adder's operand register are live together and the
logical highwater is 6n + w + 1, against 5n + 1 for the schoolbook.
'''
from fractions import Fraction
import logging
import typing as t
from qmul.arith.circuit import Circuit
from qmul.arith.adder import adder_toffoli, emit_copy_add
from qmul.arith.lookup import build_lookup, build_unlookup
from qmul.arith.schoolbook import allocate_operands
from qmul.arith.spec import MultiplySpec, MultiplierRegisters, LookupTable, MAX_WINDOW

logger = logging.getLogger(__name__)

def window_cost(n: int, w: int) -> Fraction:
  ''' Toffolis per multiplication with n/w windows, each a lookup, its fixup and one 2n-bit add '''
  return Fraction(n, w) * ((1 << w) + (1 << (w + 1) // 2) + adder_toffoli(2 * n))

def choose_window(n: int) -> int:
  ''' The window minimising the cost model over 1 <= w <= min(n, MAX_WINDOW), ties going to the smaller window.

  The window count is taken as the fraction n/w rather than ceil(n/w). With the
  ceiling the minimiser is not monotone in n: it already drops from 5 to 3
  between n=5 and n=6, where a 3-bit window divides n exactly. The fraction
  keeps the choice non-decreasing in n, at the price of pricing a short last
  window as a full one.
  '''
  return min(range(1, min(n, MAX_WINDOW) + 1), key=lambda w: (window_cost(n, w), w))

def build_windowed(spec: MultiplySpec, c_constant: t.Optional[int], circuit: Circuit) -> MultiplierRegisters:
  n = spec.n
  w = min(spec.window or choose_window(n), n)
  a, b, _ = allocate_operands(circuit, spec)
  logger.debug(f"windowed n={n} w={w}")
  # entries v*c stay below 2^(n+bits), which always fits the window's slice of a
  tables: t.Dict[int, LookupTable] = {}
  for offset in range(0, n, w):
    window = b[offset:offset + w]
    k = len(window)
    if k not in tables:
      tables[k] = LookupTable.multiples(k, c_constant, n + k)
    table = tables[k]
    output = circuit.borrow(table.entry_width)
    build_lookup(window, table, output, circuit)
    emit_copy_add(circuit, a[offset:], output)
    build_unlookup(output, window, table, circuit)
    circuit.give_back(output)
  return MultiplierRegisters(a, b, None, circuit.qubit_count)
