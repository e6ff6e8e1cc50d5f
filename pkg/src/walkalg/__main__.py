import sys

from walkalg.cli import main

sys.exit(main())
