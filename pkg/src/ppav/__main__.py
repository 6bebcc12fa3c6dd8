import sys

from ppav.cli import main

sys.exit(main())
