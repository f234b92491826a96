import logging
import logging.config
import os
from .configs import settings

logging.config.fileConfig(
    os.path.join(os.path.dirname(__file__), "logging.conf"),
    disable_existing_loggers=False,
)


# Configure the logger
logger = logging.getLogger("path_rule_miner")
logger.setLevel(settings.LOG_LEVEL)
