import importlib
import logging

import arguably

# --- SETUP LOGGING ---
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger("Main")

COMMAND_MODULES = (
    "src.commands.tables",
    "src.commands.verification",
    "src.commands.recurrence",
)


def load_commands():
    # importing a module registers its @arguably.command functions
    for name in COMMAND_MODULES:
        importlib.import_module(name)
    logger.info("Commands loaded.")


def main():
    load_commands()
    arguably.run()


if __name__ == "__main__":
    main()
