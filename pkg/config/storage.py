"""
Flat-File Storage Module
Reads and writes the JSON documents every command works on
"""

from pathlib import Path

import orjson

from config.logging_setup import get_logger
from utils.errors import GraphFormatError

logger = get_logger(__name__)


class Storage:
    """JSON document storage handler"""

    OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE

    def __init__(self, base_dir=None):
        self.base_dir = Path(base_dir) if base_dir else None

    def _resolve(self, path):
        path = Path(path)
        if self.base_dir is not None and not path.is_absolute():
            path = self.base_dir / path
        return path

    @classmethod
    def dumps(cls, document):
        """
        Serialize a document to canonical bytes

        Returns:
            bytes: sorted keys, two-space indent, trailing newline
        """
        return orjson.dumps(document, option=cls.OPTIONS)

    @staticmethod
    def loads(data):
        """
        Parse a JSON document

        Raises:
            GraphFormatError: the text is not valid JSON
        """
        try:
            return orjson.loads(data)
        except orjson.JSONDecodeError as e:
            raise GraphFormatError(f"invalid JSON: {e}") from e

    def read_json(self, path):
        """
        Read one JSON document

        Args:
            path (str | Path): file to read

        Returns:
            dict or list: parsed document
        """
        path = self._resolve(path)
        try:
            data = path.read_bytes()
        except OSError as e:
            raise GraphFormatError(f"cannot read {path}: {e}") from e
        logger.debug("read document", extra={"path": str(path), "bytes": len(data)})
        return self.loads(data)

    def write_json(self, path, document):
        """
        Write one JSON document in canonical form

        Returns:
            Path: the written file
        """
        path = self._resolve(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(self.dumps(document))
        logger.debug("wrote document", extra={"path": str(path)})
        return path

    def write_text(self, path, text):
        """Write a UTF-8 text artifact (DOT output)"""
        path = self._resolve(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        return path

    def exists(self, path):
        """Check if a document exists"""
        return self._resolve(path).is_file()
