import sys

from decsau.cli import main

sys.exit(main())
