import sys

from gencayley.cli import main

sys.exit(main())
