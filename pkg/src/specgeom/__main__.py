import sys

from specgeom.cli import main

sys.exit(main())
