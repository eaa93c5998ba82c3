import sys

from legsum.cli import main

sys.exit(main())
