from qmul.sim.state import SimState, init_state, load_register, read_register, apply, run
from qmul.sim.verify import Exhaustive, Random, VerifyReport, verify_multiplier
