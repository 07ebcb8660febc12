import sys

from wftlab.cli import main

sys.exit(main())
