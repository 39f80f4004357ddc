from collections import namedtuple

Field = namedtuple('Field', ['name', 'type', 'mode', 'description', 'fields'])


class SchemaBuilder(object):

    allowed_types = {
        "INTEGER",
        "FLOAT",
        "STRING",
        "BOOLEAN",
        "RECORD",
    }

    def __init__(self):
        self.schema = []

    def build(self, name, schema_type, mode='REQUIRED', description=None):
        is_record = isinstance(schema_type, (list, tuple))
        type_name = 'RECORD' if is_record else schema_type
        if type_name not in self.allowed_types:
            raise ValueError('"{}" not in allowed_types'.format(type_name))
        subfields = tuple(schema_type) if is_record else ()
        return Field(name, type_name, mode, description, subfields)

    def add(self, name, schema_type, mode="REQUIRED", description=None):
        field = self.build(name, schema_type, mode, description)
        self.schema.append(field)
        return field
