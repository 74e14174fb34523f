import json
from pathlib import Path
from typing import List

from pydantic import BaseModel, Field, ValidationError, model_validator

from grlie.services.groups.exceptions import GroupError, PresentationParseError
from grlie.services.groups.presentation import GroupPresentation


class PresentationDocument(BaseModel):
    name: str = Field(default="", description="Group name used in reports")
    generators: List[str] = Field(..., description="Distinct generator labels")
    relators: List[List[str]] = Field(
        default_factory=list, description="Relators as letter lists such as ['x12', 'x13^-1']"
    )

    @model_validator(mode="after")
    def validate_letters(self) -> "PresentationDocument":
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator labels must be distinct")
        bare = GroupPresentation(tuple(self.generators), (), self.name)
        for pos, relator in enumerate(self.relators):
            try:
                bare.parse_word(relator)
            except PresentationParseError as exc:
                raise ValueError(f"relator {pos}: {exc}") from exc
        return self

    def to_group(self) -> GroupPresentation:
        """
        Build the group presentation.

        Raises:
            PresentationParseError: if a relator reduces to the identity
        """
        bare = GroupPresentation(tuple(self.generators), (), self.name)
        words = tuple(bare.parse_word(relator) for relator in self.relators)
        try:
            return GroupPresentation(bare.generators, words, self.name)
        except GroupError as exc:
            raise PresentationParseError(str(exc)) from exc

    @classmethod
    def from_group(cls, G: GroupPresentation) -> "PresentationDocument":
        return cls(
            name=G.name,
            generators=list(G.generators),
            relators=[G.format_word(word) for word in G.relators],
        )


def parse_presentation(text: str) -> GroupPresentation:
    """
    Group presentation from a JSON document.

    Raises:
        PresentationParseError: on malformed JSON or an invalid document
    """
    try:
        document = PresentationDocument.model_validate_json(text)
    except ValidationError as exc:
        raise PresentationParseError(f"invalid presentation: {exc.errors()[0]['msg']}") from exc
    return document.to_group()


def load_presentation(path: str) -> GroupPresentation:
    """
    Read a presentation file.

    Raises:
        PresentationParseError: if the file is missing or does not parse
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PresentationParseError(f"cannot read {path}: {exc.strerror}") from exc
    group = parse_presentation(text)
    if not group.name:
        group = group.with_name(Path(path).stem)
    return group


def dump_presentation(G: GroupPresentation) -> str:
    return json.dumps(PresentationDocument.from_group(G).model_dump(), indent=2)
