MODULE_NAME = "wavesamp"
MODULE_AUTHOR = "wavesamp"
TOOL_VERSION = "0.1.0"
