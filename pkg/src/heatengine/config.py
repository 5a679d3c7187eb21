from typing import Any, Optional
from copy import deepcopy
from pathlib import Path

import logging
import json

logger = logging.getLogger(__name__)
JsonDict = dict[str, Any]

ROOT_ASSET_DIRECTORY = Path(__file__).resolve().parent.parent / "assets"
DEFAULTS_PATH = ROOT_ASSET_DIRECTORY / "baseConfig.json"

def readJSONFile(path: Path) -> JsonDict:
    """
    read a JSON file and return its contents as a dictionary.
    returns an empty dict if the file does not exist.

    :param path: the path to the JSON file
    :type path: Path
    :return: the parsed JSON data
    :rtype: JsonDict
    """
    if not path.exists():
        return {}

    with open(path, "r", encoding="utf-8") as file:
        return json.load(file)

def deepMerge(
    base: JsonDict,
    overlay: JsonDict
) -> JsonDict:
    """
    recursively merge an overlay dictionary into a base dictionary.
    nested dictionaries are merged recursively; other values are overwritten.

    :param base: the base dictionary to merge into
    :type base: JsonDict
    :param overlay: the dictionary with values to overlay on top of the base
    :type overlay: JsonDict
    :return: the merged dictionary
    :rtype: JsonDict
    """
    out = deepcopy(base)

    for (key, value) in overlay.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = deepMerge(out[key], value)
        else:
            out[key] = deepcopy(value)

    return out

def pruneForDefaults(
    defaults: Any,
    current: Any
) -> Any:
    """
    keep only the values of current that differ from defaults.
    numbers compare by value, so an int override of a float default that
    holds the same number is pruned.

    :param defaults: the default configuration values
    :param current: the configuration values to compare
    :return: the differences, or None if there are none
    """
    if isinstance(defaults, dict) and isinstance(current, dict):
        out: JsonDict = {}

        for (key, value) in current.items():
            if key not in defaults:
                out[key] = value
                continue

            difference = pruneForDefaults(defaults[key], value)

            if difference is not None:
                out[key] = difference

        return out or None

    if _sameValue(defaults, current):
        return None

    return current

def _sameValue(left: Any, right: Any) -> bool:
    numeric = (int, float)

    if isinstance(left, bool) or isinstance(right, bool):
        return type(left) == type(right) and left == right

    if isinstance(left, numeric) and isinstance(right, numeric):
        return float(left) == float(right)

    return type(left) == type(right) and left == right

def getByPath(
    data: JsonDict,
    path: str
) -> Any:
    """
    retrieve a value from nested dictionaries using a dot-separated path.

    :param data: the dictionary to retrieve from
    :type data: JsonDict
    :param path: dot-separated path to the value (e.g. "gup.deltaMax")
    :type path: str
    :return: the value at the specified path
    :rtype: Any
    :raises KeyError: if the path is not found in the data
    """
    current = data

    for part in path.split("."):
        if (not isinstance(current, dict)) or (part not in current):
            raise KeyError(f"Path '{path}' (at part {part}) not found in data")

        current = current[part]

    return current

def setByPath(
    data: JsonDict,
    path: str,
    value: Any
) -> None:
    """
    set a value in nested dictionaries using a dot-separated path.
    creates intermediate dictionaries as needed.

    :param data: the dictionary to modify
    :type data: JsonDict
    :param path: dot-separated path to the value
    :type path: str
    :param value: the value to set
    :type value: Any
    """
    parts = path.split(".")
    current = data

    for part in parts[:-1]:
        if part not in current or not isinstance(current[part], dict):
            current[part] = {}

        current = current[part]

    current[parts[-1]] = value

class ConfigController:
    """
    packaged numerical defaults with per-invocation overrides.
    nothing is read from or written to the user's machine; the command line
    is the only source of overrides.
    """

    def __init__(
        self,
        overrides: Optional[JsonDict] = None,
        defaultsPath: Path = DEFAULTS_PATH
    ):
        """
        :param overrides: nested values layered over the defaults
        :type overrides: Optional[JsonDict]
        :param defaultsPath: packaged defaults file
        :type defaultsPath: Path
        """

        self.defaults = readJSONFile(defaultsPath)

        if not self.defaults:
            logger.warning(f"No packaged defaults found at {defaultsPath}")

        self.config = {}
        self.loadConfig(overrides)

    def loadConfig(self, overrides: Optional[JsonDict] = None) -> JsonDict:
        """
        rebuild the configuration from the defaults and the given overrides.

        :param overrides: nested values layered over the defaults
        :type overrides: Optional[JsonDict]
        :return: the merged configuration
        :rtype: JsonDict
        """

        self.config = deepMerge(self.defaults, overrides or {})

        logger.debug("Loaded config: %s", self.config)
        return self.config

    def getValue(self, path: str) -> Any:
        """
        get a configuration value by dot-separated path.

        :param path: the config path (e.g. "paths.steps")
        :type path: str
        :return: the configuration value
        :rtype: Any
        """

        return getByPath(self.config, path)

    def setValue(self, path: str, value: Any):
        setByPath(self.config, path, value)
        logger.debug(f"config override {path} = {value!r}")

    def bulkSetValues(self, updates: dict[str, Any], parentPath: Optional[str] = None):
        """
        set several values; None values are skipped so unset command-line
        flags leave the defaults in place.

        :param updates: a dictionary of path-value pairs to update
        :type updates: dict[str, Any]
        :param parentPath: prefix joined to every path
        :type parentPath: Optional[str]
        """

        prefix = ""

        if parentPath:
            prefix = parentPath if parentPath.endswith(".") else parentPath + "."

        for (path, value) in updates.items():
            if value is None:
                continue

            self.setValue(prefix + path, value)

    def describeOverrides(self) -> JsonDict:
        """
        the values that differ from the packaged defaults.
        """

        return pruneForDefaults(self.defaults, self.config) or {}
