# -*- coding: utf-8 -*-

from sys import exit as sys_exit

from tropical_spectra.entrypoint import main

if __name__ == "__main__":
    sys_exit(main())
