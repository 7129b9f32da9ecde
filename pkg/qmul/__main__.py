import sys
from qmul.access.cli import main

sys.exit(main())
