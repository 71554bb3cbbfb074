"""The dielfet Package."""
