import sys

from pysurgflow.cli import main

sys.exit(main())
