from .envelope import InputRef, OutputEnvelope, OutputFormat, Provenance
from .heatmap import format_dot, heat_color, heatmap_document, normalize
from .to_csv import format_csv
from .to_json import format_json
