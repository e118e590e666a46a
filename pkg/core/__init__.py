# Shared exceptions, responses, validators and management commands
