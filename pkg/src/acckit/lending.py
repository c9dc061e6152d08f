"""Lending registry: fixed slots of items and patrons cross-referenced by integer id."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

FIRST_ID = 1000
NONE = -1
BOOK, PERIODICAL, EBOOK, DISC = 1, 2, 3, 4
TYPE_NAMES = {BOOK: "Book", PERIODICAL: "Periodical", EBOOK: "Ebook", DISC: "Disc"}


class CapacityFull(Exception):
    pass


@dataclass
class LendItem:
    id: int
    type_code: int = BOOK
    borrower: int = NONE
    num_pages: int = -1
    author: str = ""

    @property
    def available(self) -> bool:
        return self.borrower == NONE


@dataclass
class LendPatron:
    id: int
    item: int = NONE

    @property
    def available(self) -> bool:
        return self.item == NONE


class Registry:
    def __init__(self, max_items: int = 3, max_patrons: int = 3):
        self.item_slots: List[Optional[LendItem]] = [None] * max_items
        self.patron_slots: List[Optional[LendPatron]] = [None] * max_patrons
        self.next_item_id = FIRST_ID
        self.next_patron_id = FIRST_ID

    @classmethod
    def stocked(cls, max_items: int = 3, max_patrons: int = 3, pages: int = 250) -> "Registry":
        """Every slot filled, like the opening state of the demo library."""
        r = cls(max_items, max_patrons)
        for _ in range(max_items):
            r.add_item(BOOK, num_pages=pages, author="name")
        for _ in range(max_patrons):
            r.add_patron()
        return r

    def _slots(self, collection: str) -> list:
        if collection == "items":
            return self.item_slots
        if collection == "patrons":
            return self.patron_slots
        raise ValueError("collection must be 'items' or 'patrons'")

    def find_by_id(self, collection: str, id: int) -> Optional[int]:
        for i, entry in enumerate(self._slots(collection)):
            if entry is not None and entry.id == id:
                return i
        return None

    def find_item(self, id: int) -> Optional[LendItem]:
        i = self.find_by_id("items", id)
        return None if i is None else self.item_slots[i]

    def find_patron(self, id: int) -> Optional[LendPatron]:
        i = self.find_by_id("patrons", id)
        return None if i is None else self.patron_slots[i]

    def items(self) -> List[LendItem]:
        return [it for it in self.item_slots if it is not None]

    def patrons(self) -> List[LendPatron]:
        return [p for p in self.patron_slots if p is not None]

    def add_item(self, type_code: int = BOOK, num_pages: int = -1, author: str = "") -> int:
        if type_code not in TYPE_NAMES:
            raise ValueError("unknown item type %r" % type_code)
        for i, slot in enumerate(self.item_slots):
            if slot is None:
                item = LendItem(self.next_item_id, type_code, num_pages=num_pages, author=author)
                self.next_item_id += 1
                self.item_slots[i] = item
                return item.id
        raise CapacityFull("no free item slot")

    def add_patron(self) -> int:
        for i, slot in enumerate(self.patron_slots):
            if slot is None:
                patron = LendPatron(self.next_patron_id)
                self.next_patron_id += 1
                self.patron_slots[i] = patron
                return patron.id
        raise CapacityFull("no free patron slot")

    def borrow(self, patron_id: int, item_id: int) -> bool:
        patron, item = self.find_patron(patron_id), self.find_item(item_id)
        if patron is None or item is None or not patron.available or not item.available:
            return False
        patron.item = item.id
        item.borrower = patron.id
        return True

    def return_item(self, patron_id: int, item_id: int) -> bool:
        patron, item = self.find_patron(patron_id), self.find_item(item_id)
        if patron is None or item is None:
            return False
        if patron.item != item_id or item.borrower != patron_id:
            return False
        patron.item = NONE
        item.borrower = NONE
        return True

    def remove_item(self, item_id: int) -> bool:
        i = self.find_by_id("items", item_id)
        if i is None:
            return False
        item = self.item_slots[i]
        if not item.available:
            patron = self.find_patron(item.borrower)
            if patron is not None:
                patron.item = NONE
            item.borrower = NONE
        self.item_slots[i] = None
        return True

    def remove_patron(self, patron_id: int) -> bool:
        i = self.find_by_id("patrons", patron_id)
        if i is None:
            return False
        patron = self.patron_slots[i]
        if not patron.available:
            item = self.find_item(patron.item)
            if item is not None:
                item.borrower = NONE
            patron.item = NONE
        self.patron_slots[i] = None
        return True

    def link_state(self) -> Tuple[Tuple[Tuple[int, int], ...], Tuple[Tuple[int, int], ...]]:
        return (tuple((it.id, it.borrower) for it in self.items()),
                tuple((p.id, p.item) for p in self.patrons()))

    def integrity_errors(self) -> List[str]:
        """Every dangling or one-sided link, as readable strings; empty when consistent."""
        errors = []
        for it in self.items():
            if it.borrower != NONE:
                p = self.find_patron(it.borrower)
                if p is None:
                    errors.append("item %d points at missing patron %d" % (it.id, it.borrower))
                elif p.item != it.id:
                    errors.append("item %d -> patron %d, but patron holds %d" % (it.id, p.id, p.item))
        for p in self.patrons():
            if p.item != NONE:
                it = self.find_item(p.item)
                if it is None:
                    errors.append("patron %d points at missing item %d" % (p.id, p.item))
                elif it.borrower != p.id:
                    errors.append("patron %d -> item %d, but item is lent to %d" % (p.id, it.id, it.borrower))
        return errors

    def report(self, staff: bool = True) -> str:
        """Staff see borrower ids; patrons only see whether an item is available."""
        lines = ["=====", ">> BOOKS:"]
        for it in self.items():
            who = ("Borrower: %d" % it.borrower) if staff else ("Available: %s" % ("yes" if it.available else "no"))
            extra = ""
            if it.num_pages >= 0:
                extra += ", Number of Pages: %d" % it.num_pages
            if it.author:
                extra += ", Author: %s" % it.author
            lines.append("ID: %d, Type: %d, %s%s" % (it.id, it.type_code, who, extra))
        lines += ["=====", ">> PATRONS:"]
        for p in self.patrons():
            lines.append("ID: %d, Borrowed Item: %d" % (p.id, p.item) if staff else "ID: %d" % p.id)
        lines.append("=====")
        return "\n".join(lines)

    def dump(self) -> str:
        """Line-based state dump: one ``item``/``patron`` line per occupied slot."""
        out = []
        for i, it in enumerate(self.item_slots):
            if it is not None:
                out.append("item %d %d %d %d" % (i, it.id, it.type_code, it.borrower))
        for i, p in enumerate(self.patron_slots):
            if p is not None:
                out.append("patron %d %d %d" % (i, p.id, p.item))
        return "\n".join(out)
