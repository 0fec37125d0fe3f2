import sys

from setgames.cli import main

sys.exit(main())
