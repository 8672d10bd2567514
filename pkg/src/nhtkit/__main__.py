import sys

from nhtkit.cli import main

sys.exit(main())
