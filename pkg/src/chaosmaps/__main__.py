import sys

from chaosmaps.cli import main

sys.exit(main())
