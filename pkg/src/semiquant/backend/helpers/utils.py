from pathlib import Path
from typing import List, Union
from semiquant.backend.core.logger import get_logger
from semiquant.backend.core.constants import SEMIQUANT_LOGGER
from semiquant.backend.exceptions.errors import FieldParamsError

logger = get_logger(SEMIQUANT_LOGGER)
GRAMMARS_DIR = Path(__file__).parent / "grammars"


def load_grammar(filename: str) -> str:
    """
    Load a lark grammar shipped next to this module.
    """
    try:
        grammar_path = GRAMMARS_DIR / filename
        return grammar_path.read_text(encoding="utf-8")
    except Exception as e:
        logger.error(f"Error loading grammar from file {filename}: {e}")
        raise e


def read_k_grid(path: Union[str, Path]) -> List[float]:
    """
    Read a k^2 grid: one value per line, blank lines and `#` comments ignored.
    """
    values: List[float] = []
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FieldParamsError(f"cannot read grid file {path}: {e}", parameter="grid_file") from e

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(float(line))
        except ValueError as e:
            raise FieldParamsError(
                f"grid file {path}, line {lineno}: {line!r} is not a number",
                parameter="grid_file",
                line=lineno,
            ) from e
    if not values:
        raise FieldParamsError(f"grid file {path} contains no values", parameter="grid_file")
    return values
