# Utils package
from .rational import PyRational, format_rational, parse_rational, parse_rational_list
from .pool import ordered_map, first_success
