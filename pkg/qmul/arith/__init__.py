from qmul.arith.spec import MultiplySpec, MultiplierRegisters, LookupTable
from qmul.arith.circuit import Circuit, Const, allocate_register
from qmul.arith.adder import emit_inplace_add, emit_copy_add, emit_inplace_sub, emit_controlled_add
from qmul.arith.lookup import build_lookup, build_unlookup
from qmul.arith.windowed import choose_window
from qmul.arith.multiplier import build_multiplier
