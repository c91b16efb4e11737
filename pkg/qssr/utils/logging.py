import logging

logger = logging.getLogger("qssr")
