from .php import PhpInstance, php_formula, php_refutation
from .tseitin import TseitinInstance, cycle, circulant, tseitin_formula, tseitin_refutation
from .clique import CliqueColorInstance, clique_color_formula, clique_color_families
