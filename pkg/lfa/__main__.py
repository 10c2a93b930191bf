import sys

from lfa.cli import main

sys.exit(main())
