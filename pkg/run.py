import sys

from repcontain.main import main

if __name__ == "__main__":
    sys.exit(main())
