import sys

from PyLRC.CLI import main

sys.exit(main())
