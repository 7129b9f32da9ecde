''' a += b*c: dispatch to one of the multiplication builders
'''
import logging
import typing as t
from qmul.spec import GateSink
from qmul.arith.circuit import Circuit
from qmul.arith.spec import MultiplySpec, MultiplierRegisters
from qmul.arith.schoolbook import build_schoolbook
from qmul.arith.karatsuba import build_karatsuba
from qmul.arith.windowed import build_windowed

logger = logging.getLogger(__name__)

builders = {
  'schoolbook': build_schoolbook,
  'karatsuba': build_karatsuba,
  'windowed': build_windowed,
}

def build_multiplier(spec: MultiplySpec, c_constant: t.Optional[int], sink: GateSink) -> MultiplierRegisters:
  ''' Emit a circuit computing a += b*c mod 2^(2n) into `sink`.

  The accumulator a has 2n bits and b has n bits; c is an n-bit register in
  mode `qq` and the classical `c_constant` in mode `qc`. Every workspace qubit
  is left at zero.
  '''
  spec.check_constant(c_constant)
  circuit = Circuit(sink)
  registers = builders[spec.algorithm](spec, c_constant, circuit)
  logger.debug(f"built {spec.algorithm} n={spec.n} mode={spec.mode} on {registers.qubit_count} qubits")
  return registers
