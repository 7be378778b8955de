import sys

from numclass.cli import main

sys.exit(main())
