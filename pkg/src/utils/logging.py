
import logging
import os

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


def configure_logging(level: str = "WARNING") -> None:
    """
    Configure root logging once for command-line use.

    Parameters
    ----------
    level : str, optional
        Name of the logging level. The default is "WARNING".
    """
    logging.basicConfig(level=getattr(logging, level.upper(), logging.WARNING), format=LOG_FORMAT)


def write_artifact(text: str, file_name: str, path: str = './instances/', overwrite: bool = True):
    """
    Writes a text artifact (election, price or graph file) to a directory.

    Parameters
    ----------
    text : str
        The content to write.
    file_name : str
        The name of the file to save the content to.
    path : str, optional
        The directory to save the file in. The default is './instances/'.
    overwrite : bool, optional
        Whether to overwrite the file if it already exists. The default is True.
        - If True, the file will be overwritten.
        - If False, a unique file name will be created.

    Returns
    -------
    tuple
        The path and name of the written file.
    """
    os.makedirs(path or '.', exist_ok=True)
    file_path = os.path.join(path, file_name)

    if not overwrite and os.path.exists(file_path):
        # instance_1.elect, instance_2.elect, ...
        base_name, ext = os.path.splitext(file_name)
        i = 1
        while True:
            new_file_name = f"{base_name}_{i}{ext}"
            new_file_path = os.path.join(path, new_file_name)
            if not os.path.exists(new_file_path):
                file_path = new_file_path
                file_name = new_file_name
                break
            i += 1

    with open(file_path, 'w', encoding='utf-8') as file:
        file.write(text)

    logger.info(f"File saved to: {file_path}")

    return (file_path, file_name)
