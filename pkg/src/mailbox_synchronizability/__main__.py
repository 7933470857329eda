# -*- coding: utf-8 -*-
"""Entry point for python -m mailbox_synchronizability."""
import sys

from .cli import main

sys.exit(main())
