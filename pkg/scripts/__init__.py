"""
Módulo scripts - Componentes do verificador do cálculo de fibrados finitos.

Este pacote contém os módulos de configuração, espaços e grupos finitos,
forma de Smith, módulos finitos, fibrados, categorias internas, torres e
o motor de verificação dos teoremas.
"""

__version__ = "1.0.0"
__author__ = "Profinite Bundle Calculus Project"
