import sys

from hetjoin.cli import main

sys.exit(main())
