from commseries.cli.document import AutomatonDef, Document, SystemDef, to_polynomial
from commseries.cli.parser import parse, parse_polynomial
from commseries.cli.printer import format_document, format_expr, polynomial_to_expr
from commseries.cli.report import Report
