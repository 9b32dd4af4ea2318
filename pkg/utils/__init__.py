"""
Módulo de Utilitários e Helpers.

Contém funções auxiliares reutilizáveis para o projeto: persistência JSON
determinística, resumo criptográfico de instâncias, banners e configuração
de logging.
"""

import hashlib
import json
import logging
import os
from typing import Dict, Any, Optional


def create_directories_if_not_exist(paths: list) -> None:
    """
    Cria diretórios se não existirem.

    Args:
        paths (list): Lista de caminhos de diretórios a criar.
    """
    for path in paths:
        if path and not os.path.exists(path):
            os.makedirs(path, exist_ok=True)
            logging.getLogger(__name__).info("Diretório criado: %s", path)


def canonical_json(data: Any) -> str:
    """
    Serializa um valor JSON de forma canônica (chaves ordenadas, sem espaços).

    Args:
        data (Any): Valor serializável.

    Returns:
        str: Texto JSON canônico.
    """
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def digest(data: Any) -> str:
    """
    Resumo SHA-256 do JSON canônico de um valor.

    Args:
        data (Any): Valor serializável.

    Returns:
        str: Hexadecimal do resumo.
    """
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


def save_json(data: Dict[str, Any], filepath: str) -> None:
    """
    Salva um dicionário em arquivo JSON de forma byte-estável.

    Args:
        data (Dict[str, Any]): Dicionário com resultados.
        filepath (str): Caminho para salvar.
    """
    create_directories_if_not_exist([os.path.dirname(filepath)])
    with open(filepath, "w", encoding="utf-8", newline="\n") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")
    logging.getLogger(__name__).info("Resultados salvos em: %s", filepath)


def load_json(filepath: str) -> Dict[str, Any]:
    """
    Carrega um arquivo JSON.

    Args:
        filepath (str): Caminho do arquivo.

    Returns:
        Dict[str, Any]: Conteúdo carregado.

    Raises:
        ValueError: Se o arquivo não contiver JSON válido.
    """
    with open(filepath, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"JSON inválido em {filepath}: {e}") from e


def print_banner(text: str, char: str = "=") -> None:
    """
    Imprime um banner com texto.

    Args:
        text (str): Texto a exibir.
        char (str): Caractere para border.
    """
    width = len(text) + 4
    print(char * width)
    print(f"  {text}  ")
    print(char * width)


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configura o logging raiz do projeto.

    Args:
        level (Optional[str]): Nome do nível (DEBUG, INFO, ...). Usa
            PROFIN_LOG_LEVEL quando omitido.
    """
    from scripts.config import LOG_LEVEL

    name = (level or LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
