from .reducer import polar_swap, reduce_once, reduce_to_terminal, verify_certificate

__all__ = ['polar_swap', 'reduce_once', 'reduce_to_terminal', 'verify_certificate']
