import sys

from coxfa.cli import main

sys.exit(main())
