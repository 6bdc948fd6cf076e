from typing import TYPE_CHECKING

from ..algebra import AlgebraSpan, make_span
from ..exceptions import EmptyInput
from ..expr import parse_algebra_file, print_field
from ..types import Source

if TYPE_CHECKING:
    from .._client import PlanarLieClient


class BaseResource:
    """
    Base class for all planar-lie resources.

    Resources hold a reference to the client, which owns configuration and error
    wrapping, and share the algebra-file loading helpers below.
    """

    def __init__(self, client: "PlanarLieClient") -> None:
        """
        Initialize the resource with a client instance.

        Args:
            client: The PlanarLieClient instance that runs the operations.
        """
        self._client = client

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(client={self._client})"

    @staticmethod
    def _load(source: Source) -> tuple[list[str], AlgebraSpan]:
        """Parse an algebra file into its canonical echo and the spanned subspace.

        Raises:
            ExprSyntaxError: On a malformed line.
            EmptyInput: If the file holds no fields.
            EmptySpan: If every field is zero.
        """
        fields = parse_algebra_file(source)
        if not fields:
            raise EmptyInput()
        return [print_field(v) for v in fields], make_span(fields)
